// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "typobench/corpus.hpp"
#include "typobench/manifest.hpp"

namespace typobench {

// Swept values per axis, in canonical order.
const std::vector<int>& font_size_values();       // 3, 6, 9, 12, 15 px
const std::vector<int>& opacity_values();         // 20, 40, 60, 80, 100 percent
const std::vector<std::string>& color_values();   // the 23 palette names
const std::vector<GridCell>& position_values();   // R1C1 .. R4C4

std::size_t axis_cardinality(Axis axis);

// Variant tags: "FS-3px", "FO-20", "FC-red", "FP-R2C2" for sweeps, "FIXED"
// and "WTypo" for the fixing stage.
std::string variant_tag(Axis axis, std::size_t value_index);
inline constexpr const char* kFixedTag = "FIXED";
inline constexpr const char* kCleanTag = "WTypo";

struct BuilderConfig {
  std::uint64_t seed = 1570;
  std::string scale_tag;
  std::string font_hash;
  // Default overlay pools for items without an explicit one. Object items
  // draw from `object_pool`, Attribute items from `attribute_pool`;
  // Enumeration, Reasoning and Arithmetic pools are derived per item.
  std::vector<std::string> object_pool;
  std::vector<std::string> attribute_pool;
};

// Pinned fallback when no attribute word list is supplied.
const std::vector<std::string>& default_attribute_pool();

// Picks the overlay word for an item. The draw depends only on the manifest
// seed and the item id, so every variant of an item carries the same word
// and rebuilding with the same seed reproduces it. The item's ground truth
// text is always excluded, case-insensitively. Throws EmptyTypoPool when
// nothing remains.
std::string select_typo(const BaseItem& item, const BuilderConfig& config);

// One instance per item and axis value; the other factors stay at their
// fixed defaults. No clean twins. Throws EmptyBaseSet on an empty corpus.
Manifest build_exploring_manifest(const Corpus& corpus, Axis axis, const BuilderConfig& config);

// One typo instance at the fixed configuration plus one clean twin per item,
// interleaved in corpus order.
Manifest build_fixed_manifest(const Corpus& corpus, const BuilderConfig& config);

}  // namespace typobench
