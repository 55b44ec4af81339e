// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#include "typobench/cache.hpp"

#include <atomic>
#include <fstream>

#include "typobench/errors.hpp"
#include "typobench/jsonl.hpp"

namespace typobench {

ResponseCache::ResponseCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  if (!dir_.empty()) {
    std::filesystem::create_directories(dir_);
  }
}

std::filesystem::path ResponseCache::entry_path(const std::string& key_hex) const {
  const std::string shard = key_hex.size() >= 2 ? key_hex.substr(0, 2) : std::string("xx");
  return dir_ / shard / (key_hex + ".json");
}

std::optional<std::string> ResponseCache::get(const std::string& key_hex) const {
  if (!enabled()) {
    return std::nullopt;
  }
  std::ifstream in(entry_path(key_hex));
  if (!in) {
    return std::nullopt;
  }
  try {
    Json j;
    in >> j;
    return j.at("raw_response").get<std::string>();
  } catch (const std::exception&) {
    return std::nullopt;  // torn or foreign file, treat as a miss
  }
}

void ResponseCache::put(const std::string& key_hex, const std::string& raw_response) const {
  if (!enabled()) {
    return;
  }
  static std::atomic<std::uint64_t> counter{0};
  const std::filesystem::path path = entry_path(key_hex);
  std::filesystem::create_directories(path.parent_path());
  const std::filesystem::path tmp =
      path.parent_path() /
      (path.filename().string() + ".tmp" + std::to_string(counter.fetch_add(1)));
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) {
      throw IoError("cannot write cache entry: " + tmp.string());
    }
    out << Json{{"raw_response", raw_response}}.dump() << '\n';
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace typobench
