// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#include "typobench/endpoint.hpp"

#include <cstdlib>

#include "httplib.h"
#include "typobench/base64.hpp"
#include "typobench/errors.hpp"
#include "typobench/jsonl.hpp"

namespace typobench {

namespace {

// Splits "scheme://host:port/some/prefix" into origin and prefix. A
// trailing "/v1" in the prefix is dropped because the completions path
// below already includes it.
void split_base_url(const std::string& base_url, std::string& origin, std::string& prefix) {
  const std::size_t scheme_end = base_url.find("://");
  if (scheme_end == std::string::npos) {
    throw Error("base url must include a scheme: " + base_url);
  }
  const std::size_t path_start = base_url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) {
    origin = base_url;
    prefix.clear();
  } else {
    origin = base_url.substr(0, path_start);
    prefix = base_url.substr(path_start);
  }
  while (!prefix.empty() && prefix.back() == '/') {
    prefix.pop_back();
  }
  if (prefix.size() >= 3 && prefix.compare(prefix.size() - 3, 3, "/v1") == 0) {
    prefix.erase(prefix.size() - 3);
  }
}

}  // namespace

ChatClient::ChatClient(ModelEndpoint endpoint) : endpoint_(std::move(endpoint)) {
  split_base_url(endpoint_.base_url, origin_, path_prefix_);
}

bool ChatClient::reachable() const {
  httplib::Client cli(origin_);
  cli.set_connection_timeout(std::min(endpoint_.timeout_sec, 10));
  cli.set_read_timeout(std::min(endpoint_.timeout_sec, 10));
  const httplib::Result res = cli.Get(path_prefix_.empty() ? "/" : path_prefix_);
  // Any HTTP response proves the host is listening; only transport errors
  // count as unreachable.
  return static_cast<bool>(res);
}

ChatResult ChatClient::complete(const std::vector<ChatMessage>& messages) const {
  Json body;
  body["model"] = endpoint_.model_name;
  body["temperature"] = endpoint_.temperature;
  body["max_tokens"] = endpoint_.max_tokens;
  Json msgs = Json::array();
  for (const ChatMessage& m : messages) {
    if (m.png_image) {
      Json content = Json::array();
      content.push_back(Json{{"type", "text"}, {"text", m.text}});
      content.push_back(Json{
          {"type", "image_url"},
          {"image_url", Json{{"url", "data:image/png;base64," + base64_encode(*m.png_image)}}}});
      msgs.push_back(Json{{"role", m.role}, {"content", std::move(content)}});
    } else {
      msgs.push_back(Json{{"role", m.role}, {"content", m.text}});
    }
  }
  body["messages"] = std::move(msgs);

  httplib::Client cli(origin_);
  cli.set_connection_timeout(endpoint_.timeout_sec);
  cli.set_read_timeout(endpoint_.timeout_sec);
  cli.set_write_timeout(endpoint_.timeout_sec);
  httplib::Headers headers;
  if (!endpoint_.token_env.empty()) {
    if (const char* token = std::getenv(endpoint_.token_env.c_str());
        token && token[0] != '\0') {
      headers.emplace("Authorization", std::string("Bearer ") + token);
    }
  }

  const httplib::Result res =
      cli.Post(path_prefix_ + "/v1/chat/completions", headers, body.dump(), "application/json");

  ChatResult out;
  if (!res) {
    out.retryable = true;
    out.content = "transport error: " + httplib::to_string(res.error());
    return out;
  }
  out.status = res->status;
  if (res->status < 200 || res->status >= 300) {
    out.retryable = res->status == 429 || res->status >= 500;
    out.content = "http " + std::to_string(res->status) + ": " + res->body;
    return out;
  }
  try {
    const Json parsed = Json::parse(res->body);
    out.content = parsed.at("choices").at(0).at("message").at("content").get<std::string>();
    out.ok = true;
  } catch (const std::exception& e) {
    out.retryable = false;
    out.content = std::string("bad completion payload: ") + e.what();
  }
  return out;
}

}  // namespace typobench
