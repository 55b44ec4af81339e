// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#include "typobench/corpus.hpp"

#include <cctype>
#include <fstream>
#include <unordered_set>

#include "typobench/errors.hpp"

namespace typobench {

namespace {

bool filename_safe(const std::string& id) {
  if (id.empty()) {
    return false;
  }
  for (char c : id) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                    c == '.' || c == '_' || c == '-';
    if (!ok) {
      return false;
    }
  }
  return true;
}

}  // namespace

const std::vector<TaskKind>& all_tasks() {
  static const std::vector<TaskKind> tasks = {TaskKind::Object, TaskKind::Attribute,
                                              TaskKind::Enumeration, TaskKind::Reasoning,
                                              TaskKind::Arithmetic};
  return tasks;
}

std::string task_name(TaskKind task) {
  switch (task) {
    case TaskKind::Object:
      return "Object";
    case TaskKind::Attribute:
      return "Attribute";
    case TaskKind::Enumeration:
      return "Enumeration";
    case TaskKind::Reasoning:
      return "Reasoning";
    case TaskKind::Arithmetic:
      return "Arithmetic";
  }
  throw CorpusError("invalid task kind");
}

TaskKind parse_task(std::string_view name) {
  for (TaskKind task : all_tasks()) {
    if (task_name(task) == name) {
      return task;
    }
  }
  throw CorpusError("unknown task: " + std::string(name));
}

const std::string& BaseItem::ground_truth_text() const {
  for (const Choice& c : choices) {
    if (c.letter == ground_truth_letter) {
      return c.text;
    }
  }
  throw CorpusError("item " + id + " has no choice for ground truth letter " +
                    ground_truth_letter);
}

Json base_item_to_json(const BaseItem& item) {
  Json j;
  j["id"] = item.id;
  j["task"] = task_name(item.task);
  j["image_path"] = item.image_path;
  j["question"] = item.question;
  Json choices = Json::array();
  for (const Choice& c : item.choices) {
    choices.push_back(Json{{"letter", c.letter}, {"text", c.text}});
  }
  j["choices"] = std::move(choices);
  j["ground_truth_letter"] = item.ground_truth_letter;
  if (!item.typo_pool.empty()) {
    j["typo_pool"] = item.typo_pool;
  }
  return j;
}

BaseItem base_item_from_json(const Json& j) {
  try {
    BaseItem item;
    item.id = j.at("id").get<std::string>();
    item.task = parse_task(j.at("task").get<std::string>());
    item.image_path = j.at("image_path").get<std::string>();
    item.question = j.at("question").get<std::string>();
    for (const Json& c : j.at("choices")) {
      item.choices.push_back(
          Choice{c.at("letter").get<std::string>(), c.at("text").get<std::string>()});
    }
    item.ground_truth_letter = j.at("ground_truth_letter").get<std::string>();
    if (j.contains("typo_pool")) {
      item.typo_pool = j.at("typo_pool").get<std::vector<std::string>>();
    }
    return item;
  } catch (const Json::exception& e) {
    throw CorpusError(std::string("malformed item: ") + e.what());
  }
}

namespace {

void validate_item(const BaseItem& item) {
  if (!filename_safe(item.id)) {
    throw CorpusError("item id is not filename-safe: '" + item.id + "'");
  }
  if (item.question.empty()) {
    throw CorpusError("item " + item.id + " has an empty question");
  }
  if (item.choices.size() < 2) {
    throw CorpusError("item " + item.id + " needs at least two choices");
  }
  std::unordered_set<std::string> letters;
  for (const Choice& c : item.choices) {
    if (c.letter.size() != 1 || c.letter[0] < 'A' || c.letter[0] > 'Z') {
      throw CorpusError("item " + item.id + " has a bad choice letter: '" + c.letter + "'");
    }
    if (!letters.insert(c.letter).second) {
      throw CorpusError("item " + item.id + " repeats choice letter " + c.letter);
    }
  }
  if (!letters.count(item.ground_truth_letter)) {
    throw CorpusError("item " + item.id + " ground truth letter " + item.ground_truth_letter +
                      " is not among its choices");
  }
}

}  // namespace

Corpus load_corpus(const std::filesystem::path& path) {
  Corpus corpus;
  corpus.root = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
  std::unordered_set<std::string> seen_ids;
  for_each_jsonl(path, [&](std::size_t line_no, const Json& j) {
    BaseItem item;
    try {
      item = base_item_from_json(j);
      validate_item(item);
    } catch (const CorpusError& e) {
      throw CorpusError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
    if (!seen_ids.insert(item.id).second) {
      throw CorpusError(path.string() + ":" + std::to_string(line_no) + ": duplicate item id '" +
                        item.id + "'");
    }
    corpus.items.push_back(std::move(item));
  });
  return corpus;
}

void save_corpus(const std::filesystem::path& path, const std::vector<BaseItem>& items) {
  JsonlWriter writer(path);
  for (const BaseItem& item : items) {
    writer.write(base_item_to_json(item));
  }
}

std::vector<std::string> load_word_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open word list: " + path.string());
  }
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (!line.empty()) {
      words.push_back(line);
    }
  }
  return words;
}

}  // namespace typobench
