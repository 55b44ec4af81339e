// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "typobench/corpus.hpp"

namespace typobench {

// Every rendered prompt ends with this instruction, exactly once.
extern const std::string kAnswerSuffix;

// The phrase that distinguishes the ignore-overlay template variants.
extern const std::string kIgnorePhrase;

// A prompt template is an optional first-turn preamble, an optional second
// turn preamble, and a flag saying whether the template runs as a two-turn
// exchange (describe first, answer second) or as a single message.
struct PromptTemplate {
  std::string id;
  std::string turn1_preamble;  // may be empty (the bare template)
  std::string turn2_preamble;  // non-empty only for chained templates
  bool multi_step = false;
};

// Registry order: BASE, P1, P2.1, P2.2, P2.3, P3, P1-1, P2-1, P3-1.
const std::vector<PromptTemplate>& prompt_templates();
const PromptTemplate& prompt_template(std::string_view id);  // throws UnknownTemplate
std::vector<std::string> prompt_ids();

struct RenderOptions {
  // Chained templates normally render as two turns; this collapses them
  // into one message carrying both preambles.
  bool single_turn = false;
};

// The messages to send, in order. Single-step templates yield one turn; the
// question and lettered choices always appear in the final turn, followed by
// the answer suffix. Throws UnknownTemplate and NoChoices.
struct RenderedPrompt {
  std::string template_id;
  std::vector<std::string> turns;
};

RenderedPrompt render_prompt(std::string_view template_id, const std::string& question,
                             const std::vector<Choice>& choices, RenderOptions options = {});

// Contrastive text sets for embedding-similarity probes. "set1" holds the
// two plain captions, "set2" additionally spells out the overlay. Throws
// LabelTypoCollision when label and typo are the same word.
std::vector<std::string> render_option_set(std::string_view set_id, const std::string& label,
                                           const std::string& typo);

}  // namespace typobench
