// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "doctest.h"
#include "httplib.h"
#include "typobench/answers.hpp"
#include "typobench/builder.hpp"
#include "typobench/cache.hpp"
#include "typobench/commands.hpp"
#include "typobench/corpus.hpp"
#include "typobench/digest.hpp"
#include "typobench/errors.hpp"
#include "typobench/eval.hpp"
#include "typobench/jsonl.hpp"
#include "typobench/mock.hpp"
#include "typobench/rng.hpp"
#include "typobench/synth.hpp"

namespace {

const char* kFontPath = "assets/fonts/DejaVuSans.ttf";

std::filesystem::path temp_dir(const char* tag) {
  const auto dir = std::filesystem::temp_directory_path() /
                   (std::string("typobench_eval_") + tag);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

struct Pipeline {
  std::filesystem::path root;
  std::filesystem::path corpus_dir;
  std::filesystem::path image_dir;
  std::filesystem::path manifest_path;
  typobench::Manifest manifest;
};

// Synthesizes a small corpus, builds the fixed-stage manifest and renders
// its overlay images, all under one temporary root.
Pipeline build_pipeline(const char* tag) {
  Pipeline p;
  p.root = temp_dir(tag);
  p.corpus_dir = p.root / "corpus";
  p.image_dir = p.root / "images";

  typobench::SynthConfig synth;
  synth.out_dir = p.corpus_dir;
  synth.seed = 7;
  synth.objects = 4;
  synth.attributes = 2;
  synth.enumerations = 2;
  synth.reasonings = 2;
  synth.arithmetics = 2;
  synth.font_path = kFontPath;
  const std::filesystem::path corpus_path = typobench::generate_corpus(synth);
  const typobench::Corpus corpus = typobench::load_corpus(corpus_path);

  typobench::BuilderConfig config;
  config.seed = 33;
  config.font_hash = typobench::sha256_file_hex(kFontPath);
  config.object_pool = {"guitar", "planet", "circle", "square"};
  p.manifest = typobench::build_fixed_manifest(corpus, config);
  p.manifest_path = p.corpus_dir / "manifest.jsonl";
  typobench::save_manifest(p.manifest_path, p.manifest);

  typobench::RenderCmdOptions render;
  render.manifest_path = p.manifest_path;
  render.image_dir = p.image_dir;
  render.font_path = kFontPath;
  const typobench::Json summary = typobench::run_render(render);
  REQUIRE(summary.at("failed").get<int>() == 0);
  return p;
}

typobench::ModelEndpoint mock_endpoint(const typobench::MockModelServer& server) {
  typobench::ModelEndpoint endpoint;
  endpoint.base_url = server.base_url();
  endpoint.model_name = "mock-vlm";
  endpoint.max_in_flight = 4;
  endpoint.max_retries = 1;
  endpoint.timeout_sec = 30;
  return endpoint;
}

}  // namespace

TEST_CASE("answer parsing matches the frozen vector table") {
  int checked = 0;
  typobench::for_each_jsonl("tests/fixtures/parse_answer_vectors.jsonl",
                            [&](std::size_t, const typobench::Json& j) {
                              std::vector<typobench::Choice> choices;
                              for (const auto& pair : j.at("choices")) {
                                choices.push_back({pair.at(0).get<std::string>(),
                                                   pair.at(1).get<std::string>()});
                              }
                              const std::string raw = j.at("raw").get<std::string>();
                              const std::string expect = j.at("expect").get<std::string>();
                              INFO("raw: ", raw);
                              CHECK(typobench::parse_answer(raw, choices) == expect);
                              ++checked;
                            });
  CHECK(checked == 32);
}

TEST_CASE("answer parsing never invents a letter") {
  const std::vector<typobench::Choice> choices = {{"A", "cat"}, {"B", "dog"}, {"C", "bird"}};
  typobench::SplitMix64 rng(2024);
  const std::string alphabet =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789 .,()[]{}:;!?'\"\n";
  for (int i = 0; i < 2000; ++i) {
    const std::size_t len = typobench::bounded_uniform(rng, 60);
    std::string raw;
    for (std::size_t k = 0; k < len; ++k) {
      raw.push_back(alphabet[typobench::bounded_uniform(rng, alphabet.size())]);
    }
    const std::string parsed = typobench::parse_answer(raw, choices);
    const bool valid = parsed == "A" || parsed == "B" || parsed == "C" ||
                       parsed == typobench::kNoAnswer;
    CHECK(valid);
  }
}

TEST_CASE("response cache round-trips and tolerates being disabled") {
  const auto dir = temp_dir("cache");
  typobench::ResponseCache cache(dir / "cache");
  CHECK(cache.enabled());
  const std::string key = typobench::sha256_hex(std::string("some key material"));
  CHECK(!cache.get(key).has_value());
  cache.put(key, "the stored response");
  REQUIRE(cache.get(key).has_value());
  CHECK(*cache.get(key) == "the stored response");
  // Re-put overwrites cleanly.
  cache.put(key, "newer");
  CHECK(*cache.get(key) == "newer");

  typobench::ResponseCache disabled;
  CHECK(!disabled.enabled());
  disabled.put(key, "ignored");
  CHECK(!disabled.get(key).has_value());
  std::filesystem::remove_all(dir);
}

TEST_CASE("evaluation records round-trip through JSONL") {
  const auto dir = temp_dir("records");
  typobench::EvalRecord r;
  r.instance_id = "obj-0_FIXED";
  r.task = "Object";
  r.variant_tag = "FIXED";
  r.prompt_id = "BASE";
  r.model_name = "mock-vlm";
  r.on_typo_image = true;
  r.ground_truth_letter = "A";
  r.parsed_letter = "B";
  r.correct = false;
  r.raw_response = "B";
  r.latency_ms = 12;
  r.cache_hit = true;
  typobench::EvalRecord failed;
  failed.instance_id = "obj-1_WTypo";
  failed.task = "Object";
  failed.variant_tag = "WTypo";
  failed.prompt_id = "BASE";
  failed.model_name = "mock-vlm";
  failed.parsed_letter = typobench::kNoAnswer;
  failed.error = "transport: timeout";
  const std::vector<typobench::EvalRecord> records = {r, failed};
  typobench::save_records(dir / "records.jsonl", records);
  CHECK(typobench::load_records(dir / "records.jsonl") == records);
  std::filesystem::remove_all(dir);
}

TEST_CASE("mock end-to-end evaluation scores every instance deterministically") {
  const Pipeline p = build_pipeline("e2e");
  typobench::MockModelServer server(p.manifest, p.image_dir, p.corpus_dir);
  server.start();
  const typobench::ModelEndpoint endpoint = mock_endpoint(server);

  typobench::EvalOptions options;
  options.prompt_id = "BASE";
  const typobench::EvalResult result =
      typobench::evaluate_manifest(p.manifest, p.image_dir, p.corpus_dir, endpoint, options);
  server.stop();

  REQUIRE(result.records.size() == p.manifest.instances.size());
  CHECK(result.stats.requests == static_cast<std::int64_t>(p.manifest.instances.size()));
  int typo_correct = 0;
  int typo_total = 0;
  for (std::size_t i = 0; i < result.records.size(); ++i) {
    const typobench::EvalRecord& rec = result.records[i];
    const typobench::TypoInstance& inst = p.manifest.instances[i];
    CHECK(rec.instance_id == inst.instance_id);
    CHECK(rec.on_typo_image == inst.overlay);
    CHECK(rec.error.empty());
    CHECK(rec.model_name == "mock-vlm");
    CHECK(rec.prompt_id == "BASE");
    CHECK(rec.ground_truth_letter == inst.base.ground_truth_letter);
    const std::string expected = inst.overlay
                                     ? typobench::MockModelServer::expected_letter(inst)
                                     : inst.base.ground_truth_letter;
    CHECK(rec.parsed_letter == expected);
    CHECK(rec.correct == (rec.parsed_letter == rec.ground_truth_letter));
    if (!inst.overlay) {
      CHECK(rec.correct);
    } else {
      ++typo_total;
      typo_correct += rec.correct ? 1 : 0;
    }
  }
  REQUIRE(typo_total > 0);
  const double acc_typo = 100.0 * typo_correct / typo_total;
  CHECK(acc_typo == doctest::Approx(typobench::predicted_mock_typo_accuracy(p.manifest)));

  // Rerunning yields the identical record sequence.
  typobench::MockModelServer server2(p.manifest, p.image_dir, p.corpus_dir);
  server2.start();
  const typobench::EvalResult again = typobench::evaluate_manifest(
      p.manifest, p.image_dir, p.corpus_dir, mock_endpoint(server2), options);
  server2.stop();
  REQUIRE(again.records.size() == result.records.size());
  for (std::size_t i = 0; i < again.records.size(); ++i) {
    CHECK(again.records[i].instance_id == result.records[i].instance_id);
    CHECK(again.records[i].parsed_letter == result.records[i].parsed_letter);
    CHECK(again.records[i].raw_response == result.records[i].raw_response);
  }
  std::filesystem::remove_all(p.root);
}

TEST_CASE("chained prompts send two requests per instance") {
  const Pipeline p = build_pipeline("multiturn");
  typobench::MockModelServer server(p.manifest, p.image_dir, p.corpus_dir);
  server.start();

  typobench::EvalOptions options;
  options.prompt_id = "P2.1";
  const typobench::EvalResult result =
      typobench::evaluate_manifest(p.manifest, p.image_dir, p.corpus_dir,
                                   mock_endpoint(server), options);
  server.stop();

  REQUIRE(result.records.size() == p.manifest.instances.size());
  CHECK(result.stats.requests ==
        static_cast<std::int64_t>(2 * p.manifest.instances.size()));
  for (const typobench::EvalRecord& rec : result.records) {
    CHECK(rec.error.empty());
    CHECK(rec.prompt_id == "P2.1");
    CHECK(rec.parsed_letter != typobench::kNoAnswer);
  }
  std::filesystem::remove_all(p.root);
}

TEST_CASE("a warm cache answers without any network traffic") {
  const Pipeline p = build_pipeline("warmcache");
  const auto cache_dir = p.root / "cache";
  typobench::MockModelServer server(p.manifest, p.image_dir, p.corpus_dir);
  server.start();

  typobench::EvalOptions options;
  options.prompt_id = "BASE";
  options.cache_dir = cache_dir;
  const typobench::EvalResult cold = typobench::evaluate_manifest(
      p.manifest, p.image_dir, p.corpus_dir, mock_endpoint(server), options);
  CHECK(cold.stats.requests == static_cast<std::int64_t>(p.manifest.instances.size()));
  CHECK(cold.stats.cached_turns == 0);

  const std::int64_t served_after_cold = server.request_count();
  const typobench::EvalResult warm = typobench::evaluate_manifest(
      p.manifest, p.image_dir, p.corpus_dir, mock_endpoint(server), options);
  server.stop();

  CHECK(warm.stats.requests == 0);
  CHECK(warm.stats.cached_turns == static_cast<std::int64_t>(p.manifest.instances.size()));
  // Only the reachability probe may have touched the server again.
  CHECK(server.request_count() <= served_after_cold + 1);
  REQUIRE(warm.records.size() == cold.records.size());
  for (std::size_t i = 0; i < warm.records.size(); ++i) {
    CHECK(warm.records[i].cache_hit);
    CHECK(warm.records[i].parsed_letter == cold.records[i].parsed_letter);
    CHECK(warm.records[i].raw_response == cold.records[i].raw_response);
  }
  std::filesystem::remove_all(p.root);
}

TEST_CASE("an empty manifest needs no endpoint at all") {
  typobench::Manifest empty;
  empty.header.stage = typobench::Stage::Fixing;
  typobench::ModelEndpoint endpoint;
  endpoint.base_url = "http://127.0.0.1:1";  // nothing listens here
  const typobench::EvalResult result =
      typobench::evaluate_manifest(empty, "unused", "unused", endpoint, {});
  CHECK(result.records.empty());
  CHECK(result.stats.requests == 0);
}

TEST_CASE("an unknown prompt id fails before any request") {
  const Pipeline p = build_pipeline("badprompt");
  typobench::ModelEndpoint endpoint;
  endpoint.base_url = "http://127.0.0.1:1";
  typobench::EvalOptions options;
  options.prompt_id = "NOPE";
  CHECK_THROWS_AS(typobench::evaluate_manifest(p.manifest, p.image_dir, p.corpus_dir,
                                               endpoint, options),
                  typobench::UnknownTemplate);
  std::filesystem::remove_all(p.root);
}

TEST_CASE("a dead endpoint raises EndpointUnreachable") {
  const Pipeline p = build_pipeline("unreachable");
  typobench::MockModelServer server(p.manifest, p.image_dir, p.corpus_dir);
  const int port = server.start();
  server.stop();  // the port is now closed again

  typobench::ModelEndpoint endpoint;
  endpoint.base_url = "http://127.0.0.1:" + std::to_string(port);
  endpoint.timeout_sec = 5;
  CHECK_THROWS_AS(
      typobench::evaluate_manifest(p.manifest, p.image_dir, p.corpus_dir, endpoint, {}),
      typobench::EndpointUnreachable);
  std::filesystem::remove_all(p.root);
}

TEST_CASE("retries stay within budget and failures become soft records") {
  const Pipeline p = build_pipeline("retries");

  httplib::Server broken;
  std::atomic<int> posts{0};
  broken.Get("/", [](const httplib::Request&, httplib::Response& res) {
    res.status = 200;
    res.set_content("ok", "text/plain");
  });
  broken.Post("/v1/chat/completions",
              [&](const httplib::Request&, httplib::Response& res) {
                posts.fetch_add(1);
                res.status = 500;
                res.set_content("{\"error\":\"boom\"}", "application/json");
              });
  const int port = broken.bind_to_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread serve_thread([&] { broken.listen_after_bind(); });
  broken.wait_until_ready();

  typobench::ModelEndpoint endpoint;
  endpoint.base_url = "http://127.0.0.1:" + std::to_string(port);
  endpoint.model_name = "broken";
  endpoint.max_retries = 2;
  endpoint.max_in_flight = 4;
  endpoint.timeout_sec = 10;
  const typobench::EvalResult result =
      typobench::evaluate_manifest(p.manifest, p.image_dir, p.corpus_dir, endpoint, {});
  broken.stop();
  serve_thread.join();

  REQUIRE(result.records.size() == p.manifest.instances.size());
  const std::int64_t n = static_cast<std::int64_t>(p.manifest.instances.size());
  CHECK(posts.load() == 3 * n);
  CHECK(result.stats.requests == 3 * n);
  for (const typobench::EvalRecord& rec : result.records) {
    CHECK(!rec.error.empty());
    CHECK(rec.parsed_letter == typobench::kNoAnswer);
    CHECK(!rec.correct);
  }
  std::filesystem::remove_all(p.root);
}

TEST_CASE("missing overlay images fail soft, not fatal") {
  const Pipeline p = build_pipeline("missingimg");
  // Drop one rendered image; its record must carry the error while the rest
  // of the run completes normally.
  const std::string victim = p.manifest.instances.front().instance_id;
  std::filesystem::remove(p.image_dir / (victim + ".png"));

  typobench::MockModelServer server(p.manifest, p.image_dir, p.corpus_dir);
  server.start();
  const typobench::EvalResult result = typobench::evaluate_manifest(
      p.manifest, p.image_dir, p.corpus_dir, mock_endpoint(server), {});
  server.stop();

  REQUIRE(result.records.size() == p.manifest.instances.size());
  CHECK(!result.records.front().error.empty());
  CHECK(result.records.front().parsed_letter == typobench::kNoAnswer);
  int clean_errors = 0;
  for (std::size_t i = 1; i < result.records.size(); ++i) {
    clean_errors += result.records[i].error.empty() ? 0 : 1;
  }
  CHECK(clean_errors == 0);
  std::filesystem::remove_all(p.root);
}
