// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "typobench/corpus.hpp"
#include "typobench/grid.hpp"
#include "typobench/jsonl.hpp"

namespace typobench {

enum class Stage { Exploring, Fixing };
std::string stage_name(Stage stage);
Stage parse_stage(std::string_view name);

enum class Axis { FontSize, Opacity, Color, Position };
std::string axis_name(Axis axis);
Axis parse_axis(std::string_view name);

// The overlay parameters of one instance.
struct FactorConfig {
  int font_size_px = 15;
  int opacity_percent = 100;
  std::string color = "white";
  GridCell cell{2, 2};

  bool operator==(const FactorConfig& other) const = default;
};

// Defaults used by the fixing stage and for the axes an exploring sweep
// holds constant.
FactorConfig fixed_factor_config();

// One evaluation unit: a base item plus an overlay configuration. Clean
// twins have overlay=false and an empty typo_text; their factors record the
// configuration of the paired typo instance.
struct TypoInstance {
  std::string instance_id;
  std::string variant_tag;
  bool overlay = true;
  std::string typo_text;
  FactorConfig factors;
  std::uint64_t seed = 0;  // per-item stream seed, recorded for transparency
  BaseItem base;

  bool operator==(const TypoInstance& other) const = default;
};

struct TaskCount {
  std::int64_t typo = 0;
  std::int64_t clean = 0;

  bool operator==(const TaskCount& other) const = default;
};

struct ManifestCounts {
  std::map<std::string, TaskCount> per_task;       // key: task name
  std::map<std::string, std::int64_t> per_variant;  // key: variant tag
  std::int64_t typo_total = 0;
  std::int64_t clean_total = 0;

  bool operator==(const ManifestCounts& other) const = default;
};

struct ManifestHeader {
  Stage stage = Stage::Fixing;
  std::optional<Axis> axis;  // present for exploring manifests
  std::string scale_tag;
  std::uint64_t seed = 0;
  std::string font_hash;
  ManifestCounts counts;
};

struct Manifest {
  ManifestHeader header;
  std::vector<TypoInstance> instances;
};

// Tallies instances into a count table.
ManifestCounts count_instances(const std::vector<TypoInstance>& instances);

// Recounts the instances, checks the result against the header, and when
// `expected_per_task` is non-empty also against the caller's expectation for
// typo counts per task. Returns human-readable mismatch descriptions; an
// empty result means the manifest is consistent.
std::vector<std::string> verify_counts(const Manifest& manifest,
                                       const std::map<std::string, std::int64_t>& expected_per_task = {});

// JSONL serialization: one header line, then one line per instance, in
// order. Field order is fixed so identical manifests are byte-identical.
void save_manifest(const std::filesystem::path& path, const Manifest& manifest);
Manifest load_manifest(const std::filesystem::path& path);  // throws ManifestError

Json instance_to_json(const TypoInstance& instance);
TypoInstance instance_from_json(const Json& j);

}  // namespace typobench
