// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>

#include "typobench/corpus.hpp"

namespace typobench {

// Configuration for the procedural fixture corpus. The generator draws
// simple geometric scenes whose ground truth is known by construction, so
// the full pipeline can run offline at any scale. All content depends only
// on the seed and the counts.
struct SynthConfig {
  std::filesystem::path out_dir;
  std::uint64_t seed = 1;
  int objects = 8;
  int attributes = 4;
  int enumerations = 6;
  int reasonings = 6;
  int arithmetics = 4;
  // Large enough for the widest default-pool word at the biggest font size.
  int image_w = 256;
  int image_h = 256;
  // Used to print the expression into arithmetic base images; required only
  // when arithmetics > 0.
  std::filesystem::path font_path;
};

// Writes images/ and corpus.jsonl under config.out_dir and returns the
// corpus path.
std::filesystem::path generate_corpus(const SynthConfig& config);

}  // namespace typobench
