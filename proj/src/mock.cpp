// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#include "typobench/mock.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <thread>
#include <unordered_map>

#include "httplib.h"
#include "typobench/base64.hpp"
#include "typobench/digest.hpp"
#include "typobench/errors.hpp"
#include "typobench/jsonl.hpp"
#include "typobench/prompts.hpp"

namespace typobench {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

constexpr const char* kUnknownImageReply = "I cannot identify this image.";

}  // namespace

struct MockModelServer::Impl {
  struct Entry {
    std::string answer_letter;
    std::string caption_text;
  };

  std::unordered_map<std::string, Entry> by_hash;
  httplib::Server server;
  std::thread thread;
  std::atomic<std::int64_t> requests{0};
  int port = 0;

  void index_instance(const TypoInstance& inst, const std::filesystem::path& image_dir,
                      const std::filesystem::path& base_root) {
    const std::filesystem::path path = inst.overlay
                                           ? image_dir / (inst.instance_id + ".png")
                                           : base_root / inst.base.image_path;
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      return;  // unrendered instances simply stay unknown to the mock
    }
    const std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in),
                                          std::istreambuf_iterator<char>()};
    Entry entry;
    entry.answer_letter = expected_letter(inst);
    entry.caption_text = inst.base.ground_truth_text();
    by_hash[sha256_hex(bytes)] = std::move(entry);
  }

  void handle_completion(const httplib::Request& req, httplib::Response& res) {
    requests.fetch_add(1);
    Json body;
    try {
      body = Json::parse(req.body);
    } catch (const std::exception&) {
      res.status = 400;
      res.set_content(Json{{"error", "invalid JSON body"}}.dump(), "application/json");
      return;
    }
    if (!body.contains("messages") || !body.at("messages").is_array()) {
      res.status = 400;
      res.set_content(Json{{"error", "missing messages"}}.dump(), "application/json");
      return;
    }

    // The image rides on the first user turn; multi-turn requests repeat the
    // history, so take the most recent image and the last user text.
    std::string image_hash;
    std::string last_user_text;
    for (const Json& msg : body.at("messages")) {
      if (msg.value("role", "") != "user") {
        continue;
      }
      const Json& content = msg.at("content");
      std::string text;
      if (content.is_string()) {
        text = content.get<std::string>();
      } else if (content.is_array()) {
        for (const Json& part : content) {
          const std::string type = part.value("type", "");
          if (type == "text") {
            text += part.value("text", "");
          } else if (type == "image_url") {
            const std::string url = part.at("image_url").value("url", "");
            const std::string prefix = "data:image/png;base64,";
            if (url.rfind(prefix, 0) == 0) {
              const std::vector<std::uint8_t> bytes = base64_decode(url.substr(prefix.size()));
              if (!bytes.empty()) {
                image_hash = sha256_hex(bytes);
              }
            }
          }
        }
      }
      last_user_text = std::move(text);
    }

    const auto it = by_hash.find(image_hash);
    const bool wants_letter = last_user_text.find(kAnswerSuffix) != std::string::npos;
    std::string reply;
    if (it == by_hash.end()) {
      reply = kUnknownImageReply;
    } else if (wants_letter) {
      reply = it->second.answer_letter;
    } else {
      reply = "The image shows " + it->second.caption_text + ".";
    }

    Json out;
    out["id"] = "mock-completion";
    out["object"] = "chat.completion";
    out["model"] = body.value("model", "mock");
    out["choices"] = Json::array({Json{{"index", 0},
                                       {"message", Json{{"role", "assistant"}, {"content", reply}}},
                                       {"finish_reason", "stop"}}});
    res.set_content(out.dump(), "application/json");
  }
};

MockModelServer::MockModelServer(const Manifest& manifest, const std::filesystem::path& image_dir,
                                 const std::filesystem::path& base_root)
    : impl_(std::make_unique<Impl>()) {
  for (const TypoInstance& inst : manifest.instances) {
    impl_->index_instance(inst, image_dir, base_root);
  }
  impl_->server.Get("/health", [](const httplib::Request&, httplib::Response& res) {
    res.set_content(Json{{"status", "ok"}}.dump(), "application/json");
  });
  impl_->server.Get("/", [](const httplib::Request&, httplib::Response& res) {
    res.set_content(Json{{"service", "mock model"}}.dump(), "application/json");
  });
  impl_->server.Post("/v1/chat/completions",
                     [this](const httplib::Request& req, httplib::Response& res) {
                       impl_->handle_completion(req, res);
                     });
}

MockModelServer::~MockModelServer() { stop(); }

int MockModelServer::start(int port) {
  if (port == 0) {
    impl_->port = impl_->server.bind_to_any_port("127.0.0.1");
  } else {
    if (!impl_->server.bind_to_port("127.0.0.1", port)) {
      throw Error("cannot bind mock server to port " + std::to_string(port));
    }
    impl_->port = port;
  }
  if (impl_->port <= 0) {
    throw Error("cannot bind mock server");
  }
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  return impl_->port;
}

void MockModelServer::stop() {
  if (impl_ && impl_->thread.joinable()) {
    impl_->server.stop();
    impl_->thread.join();
  }
}

void MockModelServer::wait() {
  if (impl_->thread.joinable()) {
    impl_->thread.join();
  }
}

int MockModelServer::port() const { return impl_->port; }

std::string MockModelServer::base_url() const {
  return "http://127.0.0.1:" + std::to_string(impl_->port);
}

std::int64_t MockModelServer::request_count() const { return impl_->requests.load(); }

std::string MockModelServer::expected_letter(const TypoInstance& inst) {
  if (inst.overlay && !inst.typo_text.empty()) {
    const std::string typo = lower(inst.typo_text);
    for (const Choice& c : inst.base.choices) {
      if (lower(c.text) == typo) {
        return c.letter;
      }
    }
  }
  return inst.base.ground_truth_letter;
}

double predicted_mock_typo_accuracy(const Manifest& manifest) {
  std::int64_t typo_total = 0;
  std::int64_t unaffected = 0;
  for (const TypoInstance& inst : manifest.instances) {
    if (!inst.overlay) {
      continue;
    }
    ++typo_total;
    if (MockModelServer::expected_letter(inst) == inst.base.ground_truth_letter) {
      ++unaffected;
    }
  }
  if (typo_total == 0) {
    return 0.0;
  }
  return 100.0 * static_cast<double>(unaffected) / static_cast<double>(typo_total);
}

}  // namespace typobench
