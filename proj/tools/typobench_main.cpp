// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdio>
#include <exception>
#include <filesystem>
#include <string>

#include "CLI11.hpp"
#include "typobench/commands.hpp"
#include "typobench/errors.hpp"
#include "typobench/mock.hpp"

namespace {

void print_summary(const typobench::Json& summary) {
  std::printf("%s\n", summary.dump().c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Typographic-overlay robustness toolkit"};
  app.require_subcommand(1);

  typobench::GenerateOptions gen;
  CLI::App* generate = app.add_subcommand(
      "generate", "Build a seeded evaluation manifest from a base corpus");
  generate->add_option("--corpus", gen.corpus_path, "Corpus JSONL file")->required();
  generate->add_option("--out", gen.out_path, "Manifest output path")->required();
  generate->add_option("--stage", gen.stage, "Manifest stage: exploring or fixing")
      ->check(CLI::IsMember({"exploring", "fixing"}));
  generate->add_option("--axis", gen.axis, "Swept axis: size, opacity, color or position");
  generate->add_option("--seed", gen.seed, "Manifest seed");
  generate->add_option("--scale-tag", gen.scale_tag, "Free-form scale label for the header");
  generate->add_option("--font", gen.font_path, "Font whose hash is pinned in the manifest");
  generate->add_option("--object-classes", gen.object_classes_path,
                       "Word list for the default object overlay pool");

  typobench::RenderCmdOptions ren;
  CLI::App* render = app.add_subcommand("render", "Draw the overlay images for a manifest");
  render->add_option("--manifest", ren.manifest_path, "Manifest JSONL file")->required();
  render->add_option("--images", ren.image_dir, "Output image directory")->required();
  render->add_option("--font", ren.font_path, "Font file to render with");
  render->add_flag("--allow-font-mismatch", ren.allow_font_mismatch,
                   "Render even when the font hash differs from the manifest");

  typobench::EvalCmdOptions ev;
  CLI::App* eval = app.add_subcommand("eval", "Query a model endpoint for every instance");
  eval->add_option("--manifest", ev.manifest_path, "Manifest JSONL file")->required();
  eval->add_option("--images", ev.image_dir, "Directory with rendered overlay images")
      ->required();
  eval->add_option("--out", ev.records_out, "Records JSONL output path")->required();
  eval->add_option("--base-root", ev.base_root,
                   "Directory clean image paths resolve against (default: manifest directory)");
  eval->add_flag("--mock", ev.mock, "Serve the manifest from the built-in offline stand-in");
  eval->add_option("--base-url", ev.endpoint.base_url, "Endpoint base URL");
  eval->add_option("--model", ev.endpoint.model_name, "Model name sent with each request");
  eval->add_option("--prompt", ev.eval.prompt_id, "Prompt template id");
  eval->add_flag("--p3-single-turn", ev.eval.p3_single_turn,
                 "Render chained templates as a single message");
  eval->add_option("--cache-dir", ev.eval.cache_dir, "Response cache directory");
  eval->add_option("--max-in-flight", ev.endpoint.max_in_flight, "Concurrent requests");
  eval->add_option("--retries", ev.endpoint.max_retries, "Retries per request");
  eval->add_option("--timeout", ev.endpoint.timeout_sec, "Request timeout in seconds");
  eval->add_option("--max-tokens", ev.endpoint.max_tokens, "Completion token limit");
  eval->add_option("--temperature", ev.endpoint.temperature, "Sampling temperature");
  eval->add_option("--token-env", ev.endpoint.token_env,
                   "Environment variable holding the bearer token");

  typobench::ReportCmdOptions rep;
  std::string expect_tasks;
  CLI::App* report = app.add_subcommand("report", "Aggregate records into ACC/ACC-/GAP tables");
  report->add_option("--records", rep.records_path, "Records JSONL file")->required();
  report->add_option("--out", rep.out_path, "Report output file (default: stdout)");
  report->add_option("--format", rep.format, "Report format: md or csv")
      ->check(CLI::IsMember({"md", "csv"}));
  report->add_option("--axis", rep.axis,
                     "Render a per-setting factor table for this axis instead");
  report->add_option("--expect-tasks", expect_tasks,
                     "Comma-separated tasks that must appear in the records");

  std::filesystem::path serve_manifest;
  std::filesystem::path serve_images;
  std::filesystem::path serve_base_root;
  int serve_port = 0;
  CLI::App* serve = app.add_subcommand(
      "mock-serve", "Run the offline stand-in endpoint for a rendered manifest");
  serve->add_option("--manifest", serve_manifest, "Manifest JSONL file")->required();
  serve->add_option("--images", serve_images, "Directory with rendered overlay images")
      ->required();
  serve->add_option("--base-root", serve_base_root,
                    "Directory clean image paths resolve against (default: manifest directory)");
  serve->add_option("--port", serve_port, "Port to bind (0 picks an ephemeral port)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate) {
      print_summary(typobench::run_generate(gen));
    } else if (*render) {
      const typobench::Json summary = typobench::run_render(ren);
      print_summary(summary);
      if (summary.value("failed", 0) > 0) {
        return 1;
      }
    } else if (*eval) {
      print_summary(typobench::run_eval(ev));
    } else if (*report) {
      if (!expect_tasks.empty()) {
        std::size_t start = 0;
        while (start <= expect_tasks.size()) {
          const std::size_t comma = expect_tasks.find(',', start);
          const std::string task = expect_tasks.substr(
              start, comma == std::string::npos ? std::string::npos : comma - start);
          if (!task.empty()) {
            rep.expected_tasks.push_back(task);
          }
          if (comma == std::string::npos) {
            break;
          }
          start = comma + 1;
        }
      }
      const typobench::ReportResult result = typobench::run_report(rep);
      if (rep.out_path.empty()) {
        std::fputs(result.text.c_str(), stdout);
      }
      print_summary(result.summary);
      return result.exit_code;
    } else if (*serve) {
      const typobench::Manifest manifest = typobench::load_manifest(serve_manifest);
      const std::filesystem::path base_root =
          serve_base_root.empty()
              ? (serve_manifest.has_parent_path() ? serve_manifest.parent_path()
                                                  : std::filesystem::path("."))
              : serve_base_root;
      typobench::MockModelServer server(manifest, serve_images, base_root);
      const int port = server.start(serve_port);
      print_summary(typobench::Json{{"command", "mock-serve"},
                                    {"port", port},
                                    {"base_url", server.base_url()}});
      std::fflush(stdout);
      server.wait();
    }
  } catch (const typobench::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
