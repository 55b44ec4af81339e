// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#include "typobench/answers.hpp"

#include <algorithm>
#include <cctype>

namespace typobench {

namespace {

bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

char to_upper(char c) { return static_cast<char>(std::toupper(static_cast<unsigned char>(c))); }

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

bool is_choice_letter(char c, const std::vector<Choice>& choices) {
  for (const Choice& choice : choices) {
    if (choice.letter.size() == 1 && choice.letter[0] == to_upper(c)) {
      return true;
    }
  }
  return false;
}

bool is_trailing_punct(char c) { return c == '.' || c == ')' || c == ':'; }

}  // namespace

std::string parse_answer(std::string_view raw, const std::vector<Choice>& choices) {
  const std::string_view t = trim(raw);
  const auto letter_of = [](char c) { return std::string(1, to_upper(c)); };

  // Whole-response forms: "A", "b.", "(C)".
  if (t.size() == 1 && is_choice_letter(t[0], choices)) {
    return letter_of(t[0]);
  }
  if (t.size() == 2 && is_choice_letter(t[0], choices) && is_trailing_punct(t[1])) {
    return letter_of(t[0]);
  }
  if (t.size() == 3 && ((t[0] == '(' && t[2] == ')') || (t[0] == '[' && t[2] == ']')) &&
      is_choice_letter(t[1], choices)) {
    return letter_of(t[1]);
  }

  // First standalone choice letter in reading order. Lowercase letters need
  // extra evidence because short words such as "a" would otherwise match.
  const std::size_t n = raw.size();
  for (std::size_t i = 0; i < n; ++i) {
    const char c = raw[i];
    if (!std::isalpha(static_cast<unsigned char>(c)) || !is_choice_letter(c, choices)) {
      continue;
    }
    const bool standalone =
        (i == 0 || !is_alnum(raw[i - 1])) && (i + 1 == n || !is_alnum(raw[i + 1]));
    if (!standalone) {
      continue;
    }
    if (std::isupper(static_cast<unsigned char>(c))) {
      return letter_of(c);
    }
    const bool wrapped = i > 0 && i + 1 < n &&
                         ((raw[i - 1] == '(' && raw[i + 1] == ')') ||
                          (raw[i - 1] == '[' && raw[i + 1] == ']'));
    const bool punctuated = i + 1 < n && is_trailing_punct(raw[i + 1]);
    bool at_end = true;
    for (std::size_t k = i + 1; k < n; ++k) {
      if (is_alnum(raw[k])) {
        at_end = false;
        break;
      }
    }
    if (wrapped || punctuated || at_end) {
      return letter_of(c);
    }
  }

  // Unique choice text mentioned in the response.
  const std::string haystack = lower(raw);
  std::string found;
  for (const Choice& choice : choices) {
    if (choice.text.empty()) {
      continue;
    }
    if (haystack.find(lower(choice.text)) != std::string::npos) {
      if (!found.empty()) {
        return kNoAnswer;  // ambiguous
      }
      found = choice.letter;
    }
  }
  return found.empty() ? kNoAnswer : found;
}

}  // namespace typobench
