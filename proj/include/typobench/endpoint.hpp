// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace typobench {

// Connection settings for an OpenAI-style chat completions service.
struct ModelEndpoint {
  std::string base_url;  // e.g. "http://127.0.0.1:8000" or ".../v1"
  std::string model_name;
  double temperature = 0.0;
  int max_tokens = 512;
  int timeout_sec = 120;
  int max_retries = 2;    // extra attempts after the first, on retryable errors
  int max_in_flight = 4;  // worker threads during evaluation
  // Name of the environment variable holding the bearer token; resolved at
  // request time so tests can clear it. Empty disables authentication.
  std::string token_env = "TYPOBENCH_API_KEY";
};

struct ChatMessage {
  std::string role;  // "user" or "assistant"
  std::string text;
  std::optional<std::vector<std::uint8_t>> png_image;  // attached to user turns
};

struct ChatResult {
  bool ok = false;
  bool retryable = false;  // transport failures, 429 and 5xx
  int status = 0;          // HTTP status when a response arrived
  std::string content;     // assistant text on success, error detail otherwise
};

// Stateless wrapper around the HTTP API. A fresh connection is made per
// request, which keeps the client safe to use from any thread.
class ChatClient {
 public:
  explicit ChatClient(ModelEndpoint endpoint);

  // True when a TCP connection to the endpoint can be established at all;
  // the HTTP status of the probe does not matter.
  bool reachable() const;

  ChatResult complete(const std::vector<ChatMessage>& messages) const;

  const ModelEndpoint& endpoint() const { return endpoint_; }

 private:
  ModelEndpoint endpoint_;
  std::string origin_;       // scheme://host:port
  std::string path_prefix_;  // anything after the origin, without "/v1"
};

}  // namespace typobench
