// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "typobench/corpus.hpp"
#include "typobench/errors.hpp"
#include "typobench/prompts.hpp"

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return std::string((std::istreambuf_iterator<char>(in)), {});
}

// A template's document form: the preambles in order, then the answer
// instruction for templates that render as a single message.
std::string document_form(const typobench::PromptTemplate& tmpl) {
  std::vector<std::string> parts;
  if (!tmpl.turn1_preamble.empty()) {
    parts.push_back(tmpl.turn1_preamble);
  }
  if (!tmpl.turn2_preamble.empty()) {
    parts.push_back(tmpl.turn2_preamble);
  }
  if (!tmpl.multi_step) {
    parts.push_back(typobench::kAnswerSuffix);
  }
  std::string joined;
  for (const std::string& p : parts) {
    if (!joined.empty()) {
      joined += " ";
    }
    joined += p;
  }
  return joined + "\n";
}

std::size_t count_occurrences(const std::string& haystack, const std::string& needle) {
  std::size_t count = 0;
  std::size_t pos = 0;
  while ((pos = haystack.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

const std::vector<typobench::Choice> kChoices = {{"A", "cat"}, {"B", "dog"}};
const std::string kQuestion = "What is in the image?";

}  // namespace

TEST_CASE("registry lists the nine templates in canonical order") {
  const std::vector<std::string> expected = {"BASE", "P1",   "P2.1", "P2.2", "P2.3",
                                             "P3",   "P1-1", "P2-1", "P3-1"};
  CHECK(typobench::prompt_ids() == expected);
  CHECK(typobench::prompt_templates().size() == 9);
}

TEST_CASE("template texts byte-match the checked-in fixtures") {
  for (const typobench::PromptTemplate& tmpl : typobench::prompt_templates()) {
    const std::filesystem::path fixture = std::filesystem::path("prompts") / (tmpl.id + ".txt");
    INFO("template ", tmpl.id);
    CHECK(document_form(tmpl) == read_file(fixture));
  }
}

TEST_CASE("option set templates byte-match the checked-in fixtures") {
  // Rendering with the placeholder names themselves leaves the raw
  // templates, which is exactly what the fixtures store.
  const std::vector<std::string> set1 =
      typobench::render_option_set("Set1", "{label}", "{typo}");
  const std::vector<std::string> set2 =
      typobench::render_option_set("Set2", "{label}", "{typo}");
  std::string set1_doc;
  for (const std::string& line : set1) {
    set1_doc += line + "\n";
  }
  std::string set2_doc;
  for (const std::string& line : set2) {
    set2_doc += line + "\n";
  }
  CHECK(set1_doc == read_file("prompts/SET1.txt"));
  CHECK(set2_doc == read_file("prompts/SET2.txt"));
}

TEST_CASE("ignore-overlay variants carry the exact phrase, others do not") {
  CHECK(typobench::kIgnorePhrase == "unaffected by typographic texts.");
  for (const typobench::PromptTemplate& tmpl : typobench::prompt_templates()) {
    const std::string doc = document_form(tmpl);
    const bool is_ignore_variant = tmpl.id.size() >= 2 &&
                                   tmpl.id.compare(tmpl.id.size() - 2, 2, "-1") == 0;
    INFO("template ", tmpl.id);
    CHECK((doc.find(typobench::kIgnorePhrase) != std::string::npos) == is_ignore_variant);
  }
}

TEST_CASE("every rendered prompt ends with the answer instruction exactly once") {
  for (const std::string& id : typobench::prompt_ids()) {
    for (bool single_turn : {false, true}) {
      const typobench::RenderedPrompt rendered =
          typobench::render_prompt(id, kQuestion, kChoices, {single_turn});
      REQUIRE(!rendered.turns.empty());
      std::string transcript;
      for (const std::string& turn : rendered.turns) {
        transcript += turn;
        transcript += "\n";
      }
      INFO("template ", id, " single_turn ", single_turn);
      CHECK(count_occurrences(transcript, typobench::kAnswerSuffix) == 1);
      const std::string& last = rendered.turns.back();
      REQUIRE(last.size() >= typobench::kAnswerSuffix.size());
      CHECK(last.compare(last.size() - typobench::kAnswerSuffix.size(),
                         typobench::kAnswerSuffix.size(), typobench::kAnswerSuffix) == 0);
      CHECK(last.find("A. cat") != std::string::npos);
      CHECK(last.find("B. dog") != std::string::npos);
      CHECK(last.find(kQuestion) != std::string::npos);
    }
  }
}

TEST_CASE("single-step templates render one turn, chained templates two") {
  const typobench::RenderedPrompt base =
      typobench::render_prompt("BASE", kQuestion, kChoices);
  REQUIRE(base.turns.size() == 1);
  CHECK(base.turns[0] == kQuestion + "\nA. cat\nB. dog\n" + typobench::kAnswerSuffix);

  const typobench::RenderedPrompt p1 = typobench::render_prompt("P1", kQuestion, kChoices);
  REQUIRE(p1.turns.size() == 1);
  CHECK(p1.turns[0].rfind("Focus on the visual aspects", 0) == 0);

  const typobench::RenderedPrompt p21 = typobench::render_prompt("P2.1", kQuestion, kChoices);
  REQUIRE(p21.turns.size() == 2);
  CHECK(p21.turns[0].rfind("Provide a description of the image to answer the following question",
                           0) == 0);
  CHECK(p21.turns[0].find(kQuestion) != std::string::npos);
  CHECK(p21.turns[0].find(typobench::kAnswerSuffix) == std::string::npos);

  const typobench::RenderedPrompt p3 = typobench::render_prompt("P3", kQuestion, kChoices);
  REQUIRE(p3.turns.size() == 2);
  CHECK(p3.turns[1].rfind("Then based on your previous description", 0) == 0);

  // The collapsed form carries both preambles in one message.
  const typobench::RenderedPrompt p3_single =
      typobench::render_prompt("P3", kQuestion, kChoices, {true});
  REQUIRE(p3_single.turns.size() == 1);
  CHECK(p3_single.turns[0].find("Focus on the visual aspects") != std::string::npos);
  CHECK(p3_single.turns[0].find("Then based on your previous description") != std::string::npos);
}

TEST_CASE("render rejects unknown templates and empty choice lists") {
  CHECK_THROWS_AS(typobench::render_prompt("UNKNOWN", kQuestion, kChoices),
                  typobench::UnknownTemplate);
  CHECK_THROWS_AS(typobench::render_prompt("BASE", kQuestion, {}), typobench::NoChoices);
  CHECK_THROWS_AS(typobench::prompt_template("nope"), typobench::UnknownTemplate);
}

TEST_CASE("option sets substitute both placeholders") {
  const std::vector<std::string> set1 = typobench::render_option_set("Set1", "cat", "dog");
  CHECK(set1 == std::vector<std::string>{"an image of cat", "an image of dog"});
  const std::vector<std::string> set2 = typobench::render_option_set("Set2", "cat", "dog");
  REQUIRE(set2.size() == 4);
  CHECK(set2[0] == "an image of cat with a word dog written on top of it");
  CHECK(set2[1] == "an image of dog with a word dog written on top of it");
  CHECK(set2[2] == "an image of cat");
  CHECK(set2[3] == "an image of dog");
  for (const std::string& line : set2) {
    CHECK(line.find('{') == std::string::npos);
    CHECK(line.find('}') == std::string::npos);
  }
  // Both capitalizations of the set names are accepted.
  CHECK(typobench::render_option_set("set1", "cat", "dog") == set1);
  CHECK(typobench::render_option_set("set2", "cat", "dog") == set2);
}

TEST_CASE("option set error handling") {
  CHECK_THROWS_AS(typobench::render_option_set("Set1", "cat", "cat"),
                  typobench::LabelTypoCollision);
  CHECK_THROWS_AS(typobench::render_option_set("Set1", "Cat", "cat"),
                  typobench::LabelTypoCollision);
  CHECK_THROWS_AS(typobench::render_option_set("Set3", "cat", "dog"),
                  typobench::UnknownTemplate);
  CHECK_THROWS_AS(typobench::render_option_set("Set1", "", "dog"), typobench::Error);
}

TEST_CASE("suffix and ignore phrase are the pinned strings") {
  CHECK(typobench::kAnswerSuffix ==
        "Answer with the option's letter from the given choices directly.");
  // The registry never smuggles the suffix into a preamble.
  for (const typobench::PromptTemplate& tmpl : typobench::prompt_templates()) {
    CHECK(tmpl.turn1_preamble.find(typobench::kAnswerSuffix) == std::string::npos);
    CHECK(tmpl.turn2_preamble.find(typobench::kAnswerSuffix) == std::string::npos);
  }
}
