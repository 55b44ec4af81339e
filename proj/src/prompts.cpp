// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#include "typobench/prompts.hpp"

#include <algorithm>
#include <cctype>

#include "typobench/errors.hpp"

namespace typobench {

const std::string kAnswerSuffix =
    "Answer with the option's letter from the given choices directly.";

const std::string kIgnorePhrase = "unaffected by typographic texts.";

namespace {

const std::string kFocus =
    "Focus on the visual aspects of the image, including colors, shapes, composition, and any "
    "notable visual themes.";

const std::string kFocusIgnore =
    "Focus on the visual aspects of the image, including colors, shapes, composition, and any "
    "notable visual themes, unaffected by typographic texts.";

const std::string kDescribe =
    "Provide a description of the image to answer the following question.";

const std::string kDescribeIgnore =
    "Provide a description of the image to answer the following question, unaffected by "
    "typographic texts.";

const std::string kDescribeDetailed =
    "Provide a detailed visual description of the image to answer the following question.";

const std::string kDelve =
    "Then based on your previous description, please delve deeper into the visual details of the "
    "image and include any subtle details or elements that were not covered in your initial "
    "description to answer the following question.";

const std::string kDelveIgnore =
    "Then based on your previous description, please delve deeper into the visual details of the "
    "image and include any subtle details or elements that were not covered in your initial "
    "description to answer the following question, unaffected by typographic texts.";

std::vector<PromptTemplate> build_registry() {
  return {
      {"BASE", "", "", false},
      {"P1", kFocus, "", false},
      {"P2.1", kDescribe, "", true},
      {"P2.2", kDescribeDetailed, "", true},
      {"P2.3", kFocus + " " + kDescribeDetailed, "", true},
      {"P3", kFocus + " " + kDescribeDetailed, kDelve, true},
      {"P1-1", kFocusIgnore, "", false},
      {"P2-1", kDescribeIgnore, "", true},
      {"P3-1", kFocus + " " + kDescribeDetailed, kDelveIgnore, true},
  };
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string choice_block(const std::string& question, const std::vector<Choice>& choices) {
  std::string out = question;
  for (const Choice& c : choices) {
    out.push_back('\n');
    out += c.letter;
    out += ". ";
    out += c.text;
  }
  out.push_back('\n');
  out += kAnswerSuffix;
  return out;
}

std::string substitute(std::string text, const std::string& label, const std::string& typo) {
  const auto replace_all = [&](const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    while ((pos = text.find(key, pos)) != std::string::npos) {
      text.replace(pos, key.size(), value);
      pos += value.size();
    }
  };
  replace_all("{label}", label);
  replace_all("{typo}", typo);
  return text;
}

}  // namespace

const std::vector<PromptTemplate>& prompt_templates() {
  static const std::vector<PromptTemplate> registry = build_registry();
  return registry;
}

const PromptTemplate& prompt_template(std::string_view id) {
  for (const PromptTemplate& t : prompt_templates()) {
    if (t.id == id) {
      return t;
    }
  }
  throw UnknownTemplate("unknown prompt template: " + std::string(id));
}

std::vector<std::string> prompt_ids() {
  std::vector<std::string> ids;
  for (const PromptTemplate& t : prompt_templates()) {
    ids.push_back(t.id);
  }
  return ids;
}

RenderedPrompt render_prompt(std::string_view template_id, const std::string& question,
                             const std::vector<Choice>& choices, RenderOptions options) {
  const PromptTemplate& tmpl = prompt_template(template_id);
  if (choices.empty()) {
    throw NoChoices("prompt rendering needs at least one choice");
  }
  if (question.empty()) {
    throw Error("prompt rendering needs a question");
  }

  RenderedPrompt rendered;
  rendered.template_id = tmpl.id;

  if (!tmpl.multi_step || options.single_turn) {
    std::string preamble = tmpl.turn1_preamble;
    if (!tmpl.turn2_preamble.empty()) {
      preamble += preamble.empty() ? "" : " ";
      preamble += tmpl.turn2_preamble;
    }
    std::string turn;
    if (!preamble.empty()) {
      turn = preamble + "\n";
    }
    turn += choice_block(question, choices);
    rendered.turns.push_back(std::move(turn));
    return rendered;
  }

  // Two turns: the first asks for the description, the second asks for the
  // lettered answer. The question appears in both so each message stands on
  // its own.
  std::string turn1 = tmpl.turn1_preamble;
  turn1 += turn1.empty() ? "" : "\n";
  turn1 += question;
  rendered.turns.push_back(std::move(turn1));

  std::string turn2;
  if (!tmpl.turn2_preamble.empty()) {
    turn2 = tmpl.turn2_preamble + "\n";
  }
  turn2 += choice_block(question, choices);
  rendered.turns.push_back(std::move(turn2));
  return rendered;
}

std::vector<std::string> render_option_set(std::string_view set_id, const std::string& label,
                                           const std::string& typo) {
  if (label.empty() || typo.empty()) {
    throw Error("option sets need a non-empty label and typo");
  }
  if (lower(label) == lower(typo)) {
    throw LabelTypoCollision("label and typo are the same word: '" + label + "'");
  }
  std::vector<std::string> lines;
  if (set_id == "Set1" || set_id == "set1") {
    lines = {"an image of {label}", "an image of {typo}"};
  } else if (set_id == "Set2" || set_id == "set2") {
    lines = {"an image of {label} with a word {typo} written on top of it",
             "an image of {typo} with a word {typo} written on top of it", "an image of {label}",
             "an image of {typo}"};
  } else {
    throw UnknownTemplate("unknown option set: " + std::string(set_id));
  }
  for (std::string& line : lines) {
    line = substitute(std::move(line), label, typo);
  }
  return lines;
}

}  // namespace typobench
