// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#include "typobench/commands.hpp"

#include <fstream>
#include <map>
#include <utility>

#include "typobench/builder.hpp"
#include "typobench/compose.hpp"
#include "typobench/digest.hpp"
#include "typobench/errors.hpp"
#include "typobench/font.hpp"
#include "typobench/metrics.hpp"
#include "typobench/mock.hpp"
#include "typobench/png_io.hpp"

namespace typobench {

namespace {

std::filesystem::path manifest_root(const std::filesystem::path& manifest_path) {
  return manifest_path.has_parent_path() ? manifest_path.parent_path()
                                         : std::filesystem::path(".");
}

// Rewrites an item's image path so it resolves from the manifest's directory
// rather than the corpus directory. Falls back to an absolute path when no
// relative one exists.
std::string rebase_image_path(const std::filesystem::path& corpus_root,
                              const std::string& image_path,
                              const std::filesystem::path& manifest_dir) {
  try {
    const std::filesystem::path absolute =
        std::filesystem::weakly_canonical(corpus_root / image_path);
    const std::filesystem::path out_abs = std::filesystem::weakly_canonical(
        manifest_dir.empty() ? std::filesystem::path(".") : manifest_dir);
    const std::filesystem::path rel = std::filesystem::relative(absolute, out_abs);
    if (!rel.empty()) {
      return rel.generic_string();
    }
    return absolute.generic_string();
  } catch (const std::filesystem::filesystem_error&) {
    return (corpus_root / image_path).generic_string();
  }
}

Json counts_summary(const ManifestCounts& counts) {
  Json per_task = Json::object();
  for (const auto& [task, tally] : counts.per_task) {
    per_task[task] = Json{{"typo", tally.typo}, {"clean", tally.clean}};
  }
  return per_task;
}

}  // namespace

Json run_generate(const GenerateOptions& options) {
  Corpus corpus = load_corpus(options.corpus_path);

  BuilderConfig config;
  config.seed = options.seed;
  config.scale_tag = options.scale_tag;
  config.font_hash = sha256_file_hex(options.font_path);
  if (std::filesystem::exists(options.object_classes_path)) {
    config.object_pool = load_word_list(options.object_classes_path);
  }
  config.attribute_pool = default_attribute_pool();

  const std::filesystem::path out_dir = manifest_root(options.out_path);
  std::filesystem::create_directories(out_dir);
  for (BaseItem& item : corpus.items) {
    item.image_path = rebase_image_path(corpus.root, item.image_path, out_dir);
  }

  Manifest manifest;
  if (options.stage == "fixing") {
    manifest = build_fixed_manifest(corpus, config);
  } else if (options.stage == "exploring") {
    if (options.axis.empty()) {
      throw Error("exploring manifests need --axis (size, opacity, color or position)");
    }
    manifest = build_exploring_manifest(corpus, parse_axis(options.axis), config);
  } else {
    throw Error("unknown stage: " + options.stage);
  }
  save_manifest(options.out_path, manifest);

  Json summary;
  summary["command"] = "generate";
  summary["manifest"] = options.out_path.string();
  summary["stage"] = options.stage;
  if (!options.axis.empty()) {
    summary["axis"] = options.axis;
  }
  summary["seed"] = options.seed;
  summary["instances"] = manifest.instances.size();
  summary["typo_total"] = manifest.header.counts.typo_total;
  summary["clean_total"] = manifest.header.counts.clean_total;
  summary["per_task"] = counts_summary(manifest.header.counts);
  return summary;
}

Json run_render(const RenderCmdOptions& options) {
  const Manifest manifest = load_manifest(options.manifest_path);
  const std::filesystem::path base_root = manifest_root(options.manifest_path);

  const std::string font_hash = sha256_file_hex(options.font_path);
  if (!options.allow_font_mismatch && !manifest.header.font_hash.empty() &&
      font_hash != manifest.header.font_hash) {
    throw Error("font file does not match the manifest (" + font_hash.substr(0, 12) +
                " != " + manifest.header.font_hash.substr(0, 12) +
                "); pass a matching font or allow the mismatch explicitly");
  }
  const Font font = Font::load(options.font_path);

  std::filesystem::create_directories(options.image_dir);

  // Base images and glyph masks repeat heavily across the variants of one
  // item, so both are cached. The base cache is cleared when it grows past a
  // bound to keep memory flat on large corpora.
  std::map<std::string, RasterImage> base_cache;
  std::map<std::string, GlyphBitmap> glyph_cache;
  std::int64_t written = 0;
  std::int64_t skipped = 0;
  std::int64_t failed = 0;
  Json failures = Json::array();

  for (const TypoInstance& inst : manifest.instances) {
    if (!inst.overlay) {
      continue;
    }
    try {
      const std::string base_key = inst.base.image_path;
      auto base_it = base_cache.find(base_key);
      if (base_it == base_cache.end()) {
        if (base_cache.size() > 256) {
          base_cache.clear();
        }
        base_it = base_cache.emplace(base_key, read_png(base_root / inst.base.image_path)).first;
      }

      const std::string glyph_key =
          std::to_string(inst.factors.font_size_px) + "\x1f" + inst.typo_text;
      auto glyph_it = glyph_cache.find(glyph_key);
      if (glyph_it == glyph_cache.end()) {
        glyph_it =
            glyph_cache
                .emplace(glyph_key, font.rasterize(inst.typo_text, inst.factors.font_size_px))
                .first;
      }

      const RasterImage& base = base_it->second;
      const GlyphBitmap& glyph = glyph_it->second;
      const Anchor anchor =
          anchor_in_cell(base.width, base.height, glyph.width, glyph.height, inst.factors.cell);
      const RasterImage composed = composite(base, glyph, color_by_name(inst.factors.color),
                                             inst.factors.opacity_percent, anchor);
      const std::vector<std::uint8_t> encoded = encode_png(composed);

      const std::filesystem::path target = options.image_dir / (inst.instance_id + ".png");
      if (std::filesystem::exists(target)) {
        std::ifstream existing(target, std::ios::binary);
        const std::vector<std::uint8_t> current{std::istreambuf_iterator<char>(existing),
                                                std::istreambuf_iterator<char>()};
        if (current == encoded) {
          ++skipped;
          continue;
        }
      }
      const std::filesystem::path tmp = target.string() + ".tmp";
      {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
          throw IoError("cannot write " + tmp.string());
        }
        out.write(reinterpret_cast<const char*>(encoded.data()),
                  static_cast<std::streamsize>(encoded.size()));
      }
      std::filesystem::rename(tmp, target);
      ++written;
    } catch (const Error& e) {
      ++failed;
      if (failures.size() < 5) {
        failures.push_back(Json{{"instance_id", inst.instance_id}, {"error", e.what()}});
      }
    }
  }

  Json summary;
  summary["command"] = "render";
  summary["manifest"] = options.manifest_path.string();
  summary["image_dir"] = options.image_dir.string();
  summary["written"] = written;
  summary["skipped"] = skipped;
  summary["failed"] = failed;
  if (!failures.empty()) {
    summary["failures"] = std::move(failures);
  }
  return summary;
}

Json run_eval(const EvalCmdOptions& options) {
  const Manifest manifest = load_manifest(options.manifest_path);
  const std::filesystem::path base_root =
      options.base_root.empty() ? manifest_root(options.manifest_path) : options.base_root;

  ModelEndpoint endpoint = options.endpoint;
  std::unique_ptr<MockModelServer> mock;
  if (options.mock) {
    mock = std::make_unique<MockModelServer>(manifest, options.image_dir, base_root);
    mock->start();
    endpoint.base_url = mock->base_url();
    if (endpoint.model_name.empty()) {
      endpoint.model_name = "mock-vlm";
    }
  }
  if (endpoint.base_url.empty()) {
    throw Error("eval needs --base-url or --mock");
  }
  if (endpoint.model_name.empty()) {
    throw Error("eval needs --model");
  }

  const EvalResult result =
      evaluate_manifest(manifest, options.image_dir, base_root, endpoint, options.eval);
  if (!options.records_out.empty()) {
    if (options.records_out.has_parent_path()) {
      std::filesystem::create_directories(options.records_out.parent_path());
    }
    save_records(options.records_out, result.records);
  }

  std::int64_t errors = 0;
  for (const EvalRecord& r : result.records) {
    if (!r.error.empty()) {
      ++errors;
    }
  }

  Json summary;
  summary["command"] = "eval";
  summary["manifest"] = options.manifest_path.string();
  summary["records"] = result.records.size();
  summary["records_out"] = options.records_out.string();
  summary["model"] = endpoint.model_name;
  summary["prompt"] = options.eval.prompt_id;
  summary["requests"] = result.stats.requests;
  summary["cached_turns"] = result.stats.cached_turns;
  summary["errors"] = errors;
  if (mock) {
    summary["mock"] = true;
    summary["mock_requests"] = mock->request_count();
  }
  return summary;
}

ReportResult run_report(const ReportCmdOptions& options) {
  const std::vector<EvalRecord> records = load_records(options.records_path);
  const ReportFormat format =
      options.format == "csv" ? ReportFormat::Csv : ReportFormat::Markdown;
  if (options.format != "csv" && options.format != "md") {
    throw Error("unknown report format: " + options.format);
  }

  ReportResult result;
  if (options.axis.empty()) {
    const MetricsReport report = compute_metrics(records, options.expected_tasks);
    result.text = render_report(report, format);
    result.summary["rows"] = report.rows.size();
    if (!report.notes.empty()) {
      result.summary["notes"] = report.notes;
      result.exit_code = 2;
    }
  } else {
    const FactorTable table = compute_factor_table(records, parse_axis(options.axis));
    result.text = render_factor_table(table, format);
    result.summary["rows"] = table.rows.size();
    result.summary["axis"] = options.axis;
  }
  result.summary["command"] = "report";
  result.summary["records"] = records.size();
  result.summary["format"] = options.format;

  if (!options.out_path.empty()) {
    std::ofstream out(options.out_path, std::ios::trunc);
    if (!out) {
      throw IoError("cannot write report: " + options.out_path.string());
    }
    out << result.text;
    result.summary["out"] = options.out_path.string();
  }
  return result;
}

}  // namespace typobench
