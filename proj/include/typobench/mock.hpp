// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>

#include "typobench/manifest.hpp"

namespace typobench {

// Offline stand-in for a vision-language endpoint. It indexes every image a
// manifest can present by content hash and answers deterministically: on a
// typo image it picks the choice whose text equals the overlaid word when
// such a choice exists, otherwise the ground truth; on a clean image it
// always picks the ground truth. Description turns (no answer instruction in
// the last user message) get a one-line caption instead of a letter.
//
// This makes the expected scores computable in closed form from the manifest
// alone: clean accuracy is exactly 100 percent and typo accuracy is the
// share of instances whose overlay word matches none of the choices.
class MockModelServer {
 public:
  MockModelServer(const Manifest& manifest, const std::filesystem::path& image_dir,
                  const std::filesystem::path& base_root);
  ~MockModelServer();

  MockModelServer(const MockModelServer&) = delete;
  MockModelServer& operator=(const MockModelServer&) = delete;

  // Binds 127.0.0.1 and serves on a background thread. Port 0 picks a free
  // ephemeral port. Returns the bound port.
  int start(int port = 0);
  void stop();

  // Blocks until the server is stopped; used by the serve subcommand.
  void wait();

  int port() const;
  std::string base_url() const;
  std::int64_t request_count() const;

  // The letter the mock will answer for a typo instance; used by tests and
  // by the closed-form score predictor.
  static std::string expected_letter(const TypoInstance& instance);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Closed-form typo-side accuracy of the mock on a manifest, in percent.
double predicted_mock_typo_accuracy(const Manifest& manifest);

}  // namespace typobench
