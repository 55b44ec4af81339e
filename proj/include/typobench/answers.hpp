// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "typobench/corpus.hpp"

namespace typobench {

// The sentinel returned when no choice can be read out of a response.
inline constexpr const char* kNoAnswer = "NONE";

// Maps a free-form model response to one of the choice letters, or NONE.
// Matching order:
//   1. the whole trimmed response is one letter, optionally wrapped such as
//      "(b)", "B." or "b:";
//   2. the first standalone letter in reading order; uppercase counts
//      anywhere, lowercase only when bracketed, followed by punctuation, or
//      at the end of the response, so the article in "a dog" never matches;
//   3. the unique choice whose text occurs case-insensitively in the
//      response.
// The result is always one of the letters in `choices`, never an invented
// one.
std::string parse_answer(std::string_view raw, const std::vector<Choice>& choices);

}  // namespace typobench
