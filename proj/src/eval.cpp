// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#include "typobench/eval.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <thread>

#include "typobench/answers.hpp"
#include "typobench/cache.hpp"
#include "typobench/digest.hpp"
#include "typobench/errors.hpp"
#include "typobench/prompts.hpp"

namespace typobench {

Json record_to_json(const EvalRecord& r) {
  Json j;
  j["instance_id"] = r.instance_id;
  j["task"] = r.task;
  j["variant_tag"] = r.variant_tag;
  j["prompt_id"] = r.prompt_id;
  j["model_name"] = r.model_name;
  j["on_typo_image"] = r.on_typo_image;
  j["ground_truth_letter"] = r.ground_truth_letter;
  j["parsed_letter"] = r.parsed_letter;
  j["correct"] = r.correct;
  j["raw_response"] = r.raw_response;
  j["latency_ms"] = r.latency_ms;
  j["cache_hit"] = r.cache_hit;
  j["error"] = r.error;
  return j;
}

EvalRecord record_from_json(const Json& j) {
  EvalRecord r;
  r.instance_id = j.at("instance_id").get<std::string>();
  r.task = j.at("task").get<std::string>();
  r.variant_tag = j.at("variant_tag").get<std::string>();
  r.prompt_id = j.at("prompt_id").get<std::string>();
  r.model_name = j.at("model_name").get<std::string>();
  r.on_typo_image = j.at("on_typo_image").get<bool>();
  r.ground_truth_letter = j.at("ground_truth_letter").get<std::string>();
  r.parsed_letter = j.at("parsed_letter").get<std::string>();
  r.correct = j.at("correct").get<bool>();
  r.raw_response = j.at("raw_response").get<std::string>();
  r.latency_ms = j.at("latency_ms").get<std::int64_t>();
  r.cache_hit = j.at("cache_hit").get<bool>();
  r.error = j.at("error").get<std::string>();
  return r;
}

void save_records(const std::filesystem::path& path, const std::vector<EvalRecord>& records) {
  JsonlWriter writer(path);
  for (const EvalRecord& r : records) {
    writer.write(record_to_json(r));
  }
}

std::vector<EvalRecord> load_records(const std::filesystem::path& path) {
  std::vector<EvalRecord> records;
  for_each_jsonl(path, [&](std::size_t line_no, const Json& j) {
    try {
      records.push_back(record_from_json(j));
    } catch (const Json::exception& e) {
      throw IoError(path.string() + ":" + std::to_string(line_no) + ": bad record: " + e.what());
    }
  });
  return records;
}

namespace {

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open image: " + path.string());
  }
  return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in),
                                   std::istreambuf_iterator<char>());
}

// Cache key binding the image, the conversation so far including the turn
// being asked, and the model. The unit separator keeps fields from bleeding
// into each other.
std::string turn_cache_key(const std::vector<std::uint8_t>& image,
                           const std::vector<ChatMessage>& messages,
                           const std::string& model_name) {
  std::string material(image.begin(), image.end());
  for (const ChatMessage& m : messages) {
    material.push_back('\x1f');
    material += m.role;
    material.push_back(':');
    material += m.text;
  }
  material.push_back('\x1f');
  material += model_name;
  return sha256_hex(material);
}

}  // namespace

EvalResult evaluate_manifest(const Manifest& manifest, const std::filesystem::path& image_dir,
                             const std::filesystem::path& base_root,
                             const ModelEndpoint& endpoint, const EvalOptions& options) {
  EvalResult result;
  const std::size_t n = manifest.instances.size();
  if (n == 0) {
    return result;
  }

  // Validate the template id up front so a typo fails fast, not per item.
  prompt_template(options.prompt_id);

  const ChatClient client(endpoint);
  if (!client.reachable()) {
    throw EndpointUnreachable("cannot connect to " + endpoint.base_url);
  }

  const ResponseCache cache(options.cache_dir);
  result.records.resize(n);
  std::atomic<std::size_t> next_index{0};
  std::atomic<std::int64_t> total_requests{0};
  std::atomic<std::int64_t> cached_turns{0};

  const auto evaluate_one = [&](std::size_t idx) {
    const TypoInstance& inst = manifest.instances[idx];
    EvalRecord record;
    record.instance_id = inst.instance_id;
    record.task = task_name(inst.base.task);
    record.variant_tag = inst.variant_tag;
    record.prompt_id = options.prompt_id;
    record.model_name = endpoint.model_name;
    record.on_typo_image = inst.overlay;
    record.ground_truth_letter = inst.base.ground_truth_letter;
    record.parsed_letter = kNoAnswer;

    const auto started = std::chrono::steady_clock::now();
    const auto finish = [&]() {
      record.latency_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - started)
                              .count();
      result.records[idx] = std::move(record);
    };

    std::vector<std::uint8_t> image;
    try {
      const std::filesystem::path path = inst.overlay
                                             ? image_dir / (inst.instance_id + ".png")
                                             : base_root / inst.base.image_path;
      image = read_bytes(path);
    } catch (const IoError& e) {
      record.error = e.what();
      finish();
      return;
    }

    RenderedPrompt prompt;
    try {
      prompt = render_prompt(options.prompt_id, inst.base.question, inst.base.choices,
                             RenderOptions{options.p3_single_turn});
    } catch (const Error& e) {
      record.error = e.what();
      finish();
      return;
    }

    std::vector<ChatMessage> messages;
    std::string reply;
    bool all_cached = true;
    for (std::size_t t = 0; t < prompt.turns.size(); ++t) {
      ChatMessage user;
      user.role = "user";
      user.text = prompt.turns[t];
      if (t == 0) {
        user.png_image = image;
      }
      messages.push_back(std::move(user));

      const std::string key = turn_cache_key(image, messages, endpoint.model_name);
      if (const auto cached = cache.get(key)) {
        reply = *cached;
        cached_turns.fetch_add(1);
      } else {
        all_cached = false;
        ChatResult chat;
        const int retries = std::max(endpoint.max_retries, 0);
        for (int attempt = 0; attempt <= retries; ++attempt) {
          if (attempt > 0) {
            std::this_thread::sleep_for(std::chrono::milliseconds(100 * attempt));
          }
          total_requests.fetch_add(1);
          chat = client.complete(messages);
          if (chat.ok || !chat.retryable) {
            break;
          }
        }
        if (!chat.ok) {
          record.error = chat.content;
          finish();
          return;
        }
        reply = chat.content;
        cache.put(key, reply);
      }
      messages.push_back(ChatMessage{"assistant", reply, std::nullopt});
    }

    record.cache_hit = all_cached;
    record.raw_response = reply;
    record.parsed_letter = parse_answer(reply, inst.base.choices);
    record.correct = record.parsed_letter == record.ground_truth_letter;
    finish();
  };

  const std::size_t workers =
      std::min<std::size_t>(std::max(endpoint.max_in_flight, 1), n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t idx = next_index.fetch_add(1);
        if (idx >= n) {
          return;
        }
        evaluate_one(idx);
      }
    });
  }
  for (std::thread& t : pool) {
    t.join();
  }

  result.stats.requests = total_requests.load();
  result.stats.cached_turns = cached_turns.load();
  return result;
}

}  // namespace typobench
