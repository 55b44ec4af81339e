// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace typobench {

// Response cache keyed by hex digests, one small JSON file per entry,
// sharded by the first two hex characters. Writes go through a temporary
// file and an atomic rename so a crashed run never leaves a torn entry. A
// default-constructed cache is disabled and ignores all calls.
class ResponseCache {
 public:
  ResponseCache() = default;
  explicit ResponseCache(std::filesystem::path dir);

  bool enabled() const { return !dir_.empty(); }

  std::optional<std::string> get(const std::string& key_hex) const;
  void put(const std::string& key_hex, const std::string& raw_response) const;

 private:
  std::filesystem::path entry_path(const std::string& key_hex) const;
  std::filesystem::path dir_;
};

}  // namespace typobench
