// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "typobench/endpoint.hpp"
#include "typobench/jsonl.hpp"
#include "typobench/manifest.hpp"

namespace typobench {

// One scored response. `parsed_letter` is NONE when nothing could be read
// out of the reply or the request failed; `error` holds the failure detail
// in that case.
struct EvalRecord {
  std::string instance_id;
  std::string task;
  std::string variant_tag;
  std::string prompt_id;
  std::string model_name;
  bool on_typo_image = false;
  std::string ground_truth_letter;
  std::string parsed_letter;
  bool correct = false;
  std::string raw_response;
  std::int64_t latency_ms = 0;
  bool cache_hit = false;
  std::string error;

  bool operator==(const EvalRecord& other) const = default;
};

Json record_to_json(const EvalRecord& record);
EvalRecord record_from_json(const Json& j);

void save_records(const std::filesystem::path& path, const std::vector<EvalRecord>& records);
std::vector<EvalRecord> load_records(const std::filesystem::path& path);

struct EvalOptions {
  std::string prompt_id = "BASE";
  bool p3_single_turn = false;
  std::filesystem::path cache_dir;  // empty disables the response cache
};

struct EvalStats {
  std::int64_t requests = 0;      // HTTP requests actually sent
  std::int64_t cached_turns = 0;  // turns answered from the cache
};

struct EvalResult {
  std::vector<EvalRecord> records;  // one per instance, manifest order
  EvalStats stats;
};

// Runs every instance of the manifest against the endpoint. Typo instances
// read `image_dir/<instance_id>.png`; clean instances read the base image
// relative to `base_root`. Instances are evaluated concurrently up to
// `endpoint.max_in_flight`, but the returned records keep manifest order.
// Throws EndpointUnreachable when the first connection cannot be made; an
// empty manifest returns an empty result without touching the network.
EvalResult evaluate_manifest(const Manifest& manifest, const std::filesystem::path& image_dir,
                             const std::filesystem::path& base_root,
                             const ModelEndpoint& endpoint, const EvalOptions& options);

}  // namespace typobench
