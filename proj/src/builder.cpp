// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#include "typobench/builder.hpp"

#include <algorithm>
#include <cctype>

#include "typobench/color.hpp"
#include "typobench/errors.hpp"
#include "typobench/rng.hpp"

namespace typobench {

const std::vector<int>& font_size_values() {
  static const std::vector<int> values = {3, 6, 9, 12, 15};
  return values;
}

const std::vector<int>& opacity_values() {
  static const std::vector<int> values = {20, 40, 60, 80, 100};
  return values;
}

const std::vector<std::string>& color_values() {
  static const std::vector<std::string> values = color_names();
  return values;
}

const std::vector<GridCell>& position_values() { return grid_cells(); }

std::size_t axis_cardinality(Axis axis) {
  switch (axis) {
    case Axis::FontSize:
      return font_size_values().size();
    case Axis::Opacity:
      return opacity_values().size();
    case Axis::Color:
      return color_values().size();
    case Axis::Position:
      return position_values().size();
  }
  throw Error("invalid axis");
}

std::string variant_tag(Axis axis, std::size_t value_index) {
  switch (axis) {
    case Axis::FontSize:
      return "FS-" + std::to_string(font_size_values().at(value_index)) + "px";
    case Axis::Opacity:
      return "FO-" + std::to_string(opacity_values().at(value_index));
    case Axis::Color:
      return "FC-" + color_values().at(value_index);
    case Axis::Position:
      return "FP-" + format_cell(position_values().at(value_index));
  }
  throw Error("invalid axis");
}

const std::vector<std::string>& default_attribute_pool() {
  static const std::vector<std::string> pool = {"red",    "orange", "yellow", "green",
                                                "blue",   "purple", "pink",   "brown",
                                                "black",  "white",  "gray",   "cyan"};
  return pool;
}

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool iequal(std::string_view a, std::string_view b) { return lower(a) == lower(b); }

// Builds the candidate pool for an item, before the ground-truth exclusion.
std::vector<std::string> candidate_pool(const BaseItem& item, const BuilderConfig& config) {
  if (!item.typo_pool.empty()) {
    return item.typo_pool;
  }
  switch (item.task) {
    case TaskKind::Object:
      return config.object_pool;
    case TaskKind::Attribute:
      return config.attribute_pool.empty() ? default_attribute_pool() : config.attribute_pool;
    case TaskKind::Enumeration: {
      std::vector<std::string> pool;
      for (int n = 1; n <= 20; ++n) {
        pool.push_back(std::to_string(n));
      }
      return pool;
    }
    case TaskKind::Reasoning:
      break;
    case TaskKind::Arithmetic: {
      // Numeric neighborhood of the answer; falls back to the other choice
      // texts when the ground truth is not an integer.
      const std::string& gt = item.ground_truth_text();
      try {
        std::size_t pos = 0;
        const long long value = std::stoll(gt, &pos);
        if (pos == gt.size()) {
          std::vector<std::string> pool;
          for (long long d = -10; d <= 10; ++d) {
            if (d != 0) {
              pool.push_back(std::to_string(value + d));
            }
          }
          return pool;
        }
      } catch (const std::exception&) {
      }
      break;
    }
  }
  // Reasoning default, and the arithmetic fallback: the other choice texts.
  std::vector<std::string> pool;
  for (const Choice& c : item.choices) {
    pool.push_back(c.text);
  }
  return pool;
}

}  // namespace

std::string select_typo(const BaseItem& item, const BuilderConfig& config) {
  const std::string& gt = item.ground_truth_text();
  std::vector<std::string> candidates = candidate_pool(item, config);
  std::vector<std::string> pool;
  pool.reserve(candidates.size());
  for (std::string& word : candidates) {
    if (!word.empty() && !iequal(word, gt)) {
      pool.push_back(std::move(word));
    }
  }
  if (pool.empty()) {
    throw EmptyTypoPool("no overlay word available for item " + item.id);
  }
  SplitMix64 rng(derive_stream_seed(config.seed, item.id));
  return pool[bounded_uniform(rng, pool.size())];
}

namespace {

FactorConfig config_for(Axis axis, std::size_t value_index) {
  FactorConfig f = fixed_factor_config();
  switch (axis) {
    case Axis::FontSize:
      f.font_size_px = font_size_values().at(value_index);
      break;
    case Axis::Opacity:
      f.opacity_percent = opacity_values().at(value_index);
      break;
    case Axis::Color:
      f.color = color_values().at(value_index);
      break;
    case Axis::Position:
      f.cell = position_values().at(value_index);
      break;
  }
  return f;
}

void require_items(const Corpus& corpus) {
  if (corpus.items.empty()) {
    throw EmptyBaseSet("corpus has no items");
  }
}

}  // namespace

Manifest build_exploring_manifest(const Corpus& corpus, Axis axis, const BuilderConfig& config) {
  require_items(corpus);
  Manifest manifest;
  manifest.header.stage = Stage::Exploring;
  manifest.header.axis = axis;
  manifest.header.scale_tag = config.scale_tag;
  manifest.header.seed = config.seed;
  manifest.header.font_hash = config.font_hash;

  const std::size_t values = axis_cardinality(axis);
  manifest.instances.reserve(corpus.items.size() * values);
  for (const BaseItem& item : corpus.items) {
    const std::string typo = select_typo(item, config);
    const std::uint64_t stream_seed = derive_stream_seed(config.seed, item.id);
    for (std::size_t vi = 0; vi < values; ++vi) {
      TypoInstance inst;
      inst.variant_tag = variant_tag(axis, vi);
      inst.instance_id = item.id + "_" + inst.variant_tag;
      inst.overlay = true;
      inst.typo_text = typo;
      inst.factors = config_for(axis, vi);
      inst.seed = stream_seed;
      inst.base = item;
      manifest.instances.push_back(std::move(inst));
    }
  }
  manifest.header.counts = count_instances(manifest.instances);
  return manifest;
}

Manifest build_fixed_manifest(const Corpus& corpus, const BuilderConfig& config) {
  require_items(corpus);
  Manifest manifest;
  manifest.header.stage = Stage::Fixing;
  manifest.header.scale_tag = config.scale_tag;
  manifest.header.seed = config.seed;
  manifest.header.font_hash = config.font_hash;

  manifest.instances.reserve(corpus.items.size() * 2);
  for (const BaseItem& item : corpus.items) {
    const std::string typo = select_typo(item, config);
    const std::uint64_t stream_seed = derive_stream_seed(config.seed, item.id);

    TypoInstance typo_inst;
    typo_inst.variant_tag = kFixedTag;
    typo_inst.instance_id = item.id + "_" + kFixedTag;
    typo_inst.overlay = true;
    typo_inst.typo_text = typo;
    typo_inst.factors = fixed_factor_config();
    typo_inst.seed = stream_seed;
    typo_inst.base = item;
    manifest.instances.push_back(std::move(typo_inst));

    TypoInstance clean;
    clean.variant_tag = kCleanTag;
    clean.instance_id = item.id + "_" + kCleanTag;
    clean.overlay = false;
    clean.typo_text.clear();
    clean.factors = fixed_factor_config();
    clean.seed = stream_seed;
    clean.base = item;
    manifest.instances.push_back(std::move(clean));
  }
  manifest.header.counts = count_instances(manifest.instances);
  return manifest;
}

}  // namespace typobench
