// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <fstream>
#include <functional>
#include <string>

#include "json.hpp"
#include "typobench/errors.hpp"

namespace typobench {

// Field order in emitted JSON matters for byte-stable manifests, so all
// serialization in this project uses ordered_json.
using Json = nlohmann::ordered_json;

// Calls `fn(line_number, parsed)` for every non-empty line.
inline void for_each_jsonl(const std::filesystem::path& path,
                           const std::function<void(std::size_t, const Json&)>& fn) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open file: " + path.string());
  }
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) {
      continue;
    }
    Json parsed;
    try {
      parsed = Json::parse(line);
    } catch (const std::exception& e) {
      throw IoError(path.string() + ":" + std::to_string(line_no) + ": bad JSON: " + e.what());
    }
    fn(line_no, parsed);
  }
}

class JsonlWriter {
 public:
  explicit JsonlWriter(const std::filesystem::path& path) : out_(path, std::ios::trunc) {
    if (!out_) {
      throw IoError("cannot open file for writing: " + path.string());
    }
  }

  void write(const Json& value) { out_ << value.dump() << '\n'; }

  void close() { out_.close(); }

 private:
  std::ofstream out_;
};

}  // namespace typobench
