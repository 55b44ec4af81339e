// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#include "typobench/manifest.hpp"

#include "typobench/errors.hpp"

namespace typobench {

std::string stage_name(Stage stage) {
  return stage == Stage::Exploring ? "exploring" : "fixing";
}

Stage parse_stage(std::string_view name) {
  if (name == "exploring") {
    return Stage::Exploring;
  }
  if (name == "fixing") {
    return Stage::Fixing;
  }
  throw ManifestError("unknown stage: " + std::string(name));
}

std::string axis_name(Axis axis) {
  switch (axis) {
    case Axis::FontSize:
      return "size";
    case Axis::Opacity:
      return "opacity";
    case Axis::Color:
      return "color";
    case Axis::Position:
      return "position";
  }
  throw ManifestError("invalid axis");
}

Axis parse_axis(std::string_view name) {
  if (name == "size") {
    return Axis::FontSize;
  }
  if (name == "opacity") {
    return Axis::Opacity;
  }
  if (name == "color") {
    return Axis::Color;
  }
  if (name == "position") {
    return Axis::Position;
  }
  throw ManifestError("unknown axis: " + std::string(name));
}

FactorConfig fixed_factor_config() { return FactorConfig{15, 100, "white", GridCell{2, 2}}; }

namespace {

Json factors_to_json(const FactorConfig& f) {
  Json j;
  j["font_size_px"] = f.font_size_px;
  j["opacity_percent"] = f.opacity_percent;
  j["color"] = f.color;
  j["cell"] = format_cell(f.cell);
  return j;
}

FactorConfig factors_from_json(const Json& j) {
  FactorConfig f;
  f.font_size_px = j.at("font_size_px").get<int>();
  f.opacity_percent = j.at("opacity_percent").get<int>();
  f.color = j.at("color").get<std::string>();
  f.cell = parse_cell(j.at("cell").get<std::string>());
  return f;
}

Json counts_to_json(const ManifestCounts& counts) {
  Json per_task = Json::object();
  for (const auto& [task, tally] : counts.per_task) {
    per_task[task] = Json{{"typo", tally.typo}, {"clean", tally.clean}};
  }
  Json per_variant = Json::object();
  for (const auto& [tag, n] : counts.per_variant) {
    per_variant[tag] = n;
  }
  Json j;
  j["per_task"] = std::move(per_task);
  j["per_variant"] = std::move(per_variant);
  j["typo_total"] = counts.typo_total;
  j["clean_total"] = counts.clean_total;
  return j;
}

ManifestCounts counts_from_json(const Json& j) {
  ManifestCounts counts;
  for (const auto& [task, tally] : j.at("per_task").items()) {
    counts.per_task[task] =
        TaskCount{tally.at("typo").get<std::int64_t>(), tally.at("clean").get<std::int64_t>()};
  }
  for (const auto& [tag, n] : j.at("per_variant").items()) {
    counts.per_variant[tag] = n.get<std::int64_t>();
  }
  counts.typo_total = j.at("typo_total").get<std::int64_t>();
  counts.clean_total = j.at("clean_total").get<std::int64_t>();
  return counts;
}

}  // namespace

ManifestCounts count_instances(const std::vector<TypoInstance>& instances) {
  ManifestCounts counts;
  for (const TypoInstance& inst : instances) {
    TaskCount& tally = counts.per_task[task_name(inst.base.task)];
    if (inst.overlay) {
      ++tally.typo;
      ++counts.typo_total;
    } else {
      ++tally.clean;
      ++counts.clean_total;
    }
    ++counts.per_variant[inst.variant_tag];
  }
  return counts;
}

std::vector<std::string> verify_counts(const Manifest& manifest,
                                       const std::map<std::string, std::int64_t>& expected_per_task) {
  std::vector<std::string> mismatches;
  const ManifestCounts recount = count_instances(manifest.instances);
  if (!(recount == manifest.header.counts)) {
    mismatches.push_back("header counts do not match the instance list");
  }
  for (const auto& [task, expected] : expected_per_task) {
    const auto it = recount.per_task.find(task);
    const std::int64_t actual = it == recount.per_task.end() ? 0 : it->second.typo;
    if (actual != expected) {
      mismatches.push_back("task " + task + ": expected " + std::to_string(expected) +
                           " typo instances, found " + std::to_string(actual));
    }
  }
  return mismatches;
}

Json instance_to_json(const TypoInstance& instance) {
  Json j;
  j["type"] = "instance";
  j["instance_id"] = instance.instance_id;
  j["variant_tag"] = instance.variant_tag;
  j["overlay"] = instance.overlay;
  j["typo_text"] = instance.typo_text;
  j["factors"] = factors_to_json(instance.factors);
  j["seed"] = instance.seed;
  j["base"] = base_item_to_json(instance.base);
  return j;
}

TypoInstance instance_from_json(const Json& j) {
  try {
    TypoInstance inst;
    inst.instance_id = j.at("instance_id").get<std::string>();
    inst.variant_tag = j.at("variant_tag").get<std::string>();
    inst.overlay = j.at("overlay").get<bool>();
    inst.typo_text = j.at("typo_text").get<std::string>();
    inst.factors = factors_from_json(j.at("factors"));
    inst.seed = j.at("seed").get<std::uint64_t>();
    inst.base = base_item_from_json(j.at("base"));
    return inst;
  } catch (const Json::exception& e) {
    throw ManifestError(std::string("malformed instance: ") + e.what());
  }
}

void save_manifest(const std::filesystem::path& path, const Manifest& manifest) {
  Json header;
  header["type"] = "header";
  header["stage"] = stage_name(manifest.header.stage);
  if (manifest.header.axis) {
    header["axis"] = axis_name(*manifest.header.axis);
  }
  header["scale_tag"] = manifest.header.scale_tag;
  header["seed"] = manifest.header.seed;
  header["font_hash"] = manifest.header.font_hash;
  header["counts"] = counts_to_json(manifest.header.counts);

  JsonlWriter writer(path);
  writer.write(header);
  for (const TypoInstance& inst : manifest.instances) {
    writer.write(instance_to_json(inst));
  }
}

Manifest load_manifest(const std::filesystem::path& path) {
  Manifest manifest;
  bool have_header = false;
  for_each_jsonl(path, [&](std::size_t line_no, const Json& j) {
    const std::string type = j.value("type", "");
    if (type == "header") {
      if (have_header) {
        throw ManifestError(path.string() + ": repeated header line");
      }
      have_header = true;
      try {
        manifest.header.stage = parse_stage(j.at("stage").get<std::string>());
        if (j.contains("axis")) {
          manifest.header.axis = parse_axis(j.at("axis").get<std::string>());
        }
        manifest.header.scale_tag = j.at("scale_tag").get<std::string>();
        manifest.header.seed = j.at("seed").get<std::uint64_t>();
        manifest.header.font_hash = j.at("font_hash").get<std::string>();
        manifest.header.counts = counts_from_json(j.at("counts"));
      } catch (const Json::exception& e) {
        throw ManifestError(path.string() + ": malformed header: " + e.what());
      }
    } else if (type == "instance") {
      if (!have_header) {
        throw ManifestError(path.string() + ": instance before header");
      }
      try {
        manifest.instances.push_back(instance_from_json(j));
      } catch (const Error& e) {
        throw ManifestError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
      }
    } else {
      throw ManifestError(path.string() + ":" + std::to_string(line_no) +
                          ": unknown line type '" + type + "'");
    }
  });
  if (!have_header) {
    throw ManifestError(path.string() + ": missing header line");
  }
  return manifest;
}

}  // namespace typobench
