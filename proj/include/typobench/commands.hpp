// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "typobench/endpoint.hpp"
#include "typobench/eval.hpp"
#include "typobench/jsonl.hpp"

namespace typobench {

// Default manifest seed; any value works, this one is simply the pinned
// default so runs are reproducible out of the box.
inline constexpr std::uint64_t kDefaultSeed = 1570;

// Each run_* function is the body of one CLI subcommand. They return the
// run summary that the CLI prints as a single JSON line, so tests can call
// them in-process and assert on the same data the user sees.

struct GenerateOptions {
  std::filesystem::path corpus_path;
  std::filesystem::path out_path;
  std::string stage = "fixing";
  std::string axis;  // required when stage == "exploring"
  std::uint64_t seed = kDefaultSeed;
  std::string scale_tag;
  std::filesystem::path font_path = "assets/fonts/DejaVuSans.ttf";
  std::filesystem::path object_classes_path = "assets/object_classes.txt";
};

Json run_generate(const GenerateOptions& options);

struct RenderCmdOptions {
  std::filesystem::path manifest_path;
  std::filesystem::path image_dir;
  std::filesystem::path font_path = "assets/fonts/DejaVuSans.ttf";
  // The manifest records the hash of the font it was built for; rendering
  // with a different file is refused unless this is set.
  bool allow_font_mismatch = false;
};

Json run_render(const RenderCmdOptions& options);

struct EvalCmdOptions {
  std::filesystem::path manifest_path;
  std::filesystem::path image_dir;
  std::filesystem::path records_out;
  std::filesystem::path base_root;  // defaults to the manifest's directory
  bool mock = false;                // serve the manifest from an in-process stand-in
  ModelEndpoint endpoint;
  EvalOptions eval;
};

Json run_eval(const EvalCmdOptions& options);

struct ReportCmdOptions {
  std::filesystem::path records_path;
  std::filesystem::path out_path;  // empty prints to stdout
  std::string format = "md";       // or "csv"
  std::string axis;                // non-empty renders a factor table instead
  std::vector<std::string> expected_tasks;
};

struct ReportResult {
  Json summary;
  std::string text;
  int exit_code = 0;  // 2 when an expected task had no records
};

ReportResult run_report(const ReportCmdOptions& options);

}  // namespace typobench
