// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "typobench/jsonl.hpp"

namespace typobench {

enum class TaskKind { Object, Attribute, Enumeration, Reasoning, Arithmetic };

// Canonical ordering used by reports and count tables.
const std::vector<TaskKind>& all_tasks();
std::string task_name(TaskKind task);
TaskKind parse_task(std::string_view name);  // throws CorpusError

struct Choice {
  std::string letter;  // single character, "A".."Z"
  std::string text;

  bool operator==(const Choice& other) const = default;
};

// One evaluation item before any overlay is applied. `image_path` is kept as
// written in the corpus file and resolved against the corpus directory.
struct BaseItem {
  std::string id;
  TaskKind task = TaskKind::Object;
  std::string image_path;
  std::string question;
  std::vector<Choice> choices;
  std::string ground_truth_letter;
  std::vector<std::string> typo_pool;  // optional explicit pool

  const std::string& ground_truth_text() const;

  bool operator==(const BaseItem& other) const = default;
};

Json base_item_to_json(const BaseItem& item);
BaseItem base_item_from_json(const Json& j);  // throws CorpusError

struct Corpus {
  std::filesystem::path root;  // directory of the corpus file
  std::vector<BaseItem> items;
};

// Reads a JSONL corpus, one item per line. Validates ids (filename-safe,
// unique), choice letters (unique single uppercase letters) and that the
// ground truth letter names an existing choice.
Corpus load_corpus(const std::filesystem::path& path);

void save_corpus(const std::filesystem::path& path, const std::vector<BaseItem>& items);

// One name per non-empty line; used for the default Object overlay pool.
std::vector<std::string> load_word_list(const std::filesystem::path& path);

}  // namespace typobench
