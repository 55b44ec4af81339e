// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#include "typobench/digest.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <memory>

#include "typobench/errors.hpp"

namespace typobench {

namespace {

struct CtxDeleter {
  void operator()(EVP_MD_CTX* ctx) const { EVP_MD_CTX_free(ctx); }
};

using CtxPtr = std::unique_ptr<EVP_MD_CTX, CtxDeleter>;

CtxPtr new_sha256_ctx() {
  CtxPtr ctx(EVP_MD_CTX_new());
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw IoError("sha256 context initialization failed");
  }
  return ctx;
}

Sha256 finish(CtxPtr ctx) {
  Sha256 out{};
  unsigned int len = 0;
  if (EVP_DigestFinal_ex(ctx.get(), out.data(), &len) != 1 || len != out.size()) {
    throw IoError("sha256 finalization failed");
  }
  return out;
}

}  // namespace

Sha256 sha256_bytes(const void* data, std::size_t size) {
  CtxPtr ctx = new_sha256_ctx();
  if (size > 0 && EVP_DigestUpdate(ctx.get(), data, size) != 1) {
    throw IoError("sha256 update failed");
  }
  return finish(std::move(ctx));
}

Sha256 sha256_bytes(const std::string& data) {
  return sha256_bytes(data.data(), data.size());
}

Sha256 sha256_bytes(const std::vector<std::uint8_t>& data) {
  return sha256_bytes(data.data(), data.size());
}

Sha256 sha256_file(const std::filesystem::path& path) {
  std::FILE* f = std::fopen(path.string().c_str(), "rb");
  if (!f) {
    throw IoError("cannot open file for hashing: " + path.string());
  }
  CtxPtr ctx = new_sha256_ctx();
  std::vector<std::uint8_t> buf(1 << 16);
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), f)) > 0) {
    if (EVP_DigestUpdate(ctx.get(), buf.data(), n) != 1) {
      std::fclose(f);
      throw IoError("sha256 update failed");
    }
  }
  const bool read_error = std::ferror(f) != 0;
  std::fclose(f);
  if (read_error) {
    throw IoError("read failure while hashing: " + path.string());
  }
  return finish(std::move(ctx));
}

std::string to_hex(const Sha256& digest) {
  static const char* kHex = "0123456789abcdef";
  std::string out;
  out.reserve(64);
  for (std::uint8_t b : digest) {
    out.push_back(kHex[b >> 4]);
    out.push_back(kHex[b & 0xF]);
  }
  return out;
}

std::string sha256_hex(const std::string& data) { return to_hex(sha256_bytes(data)); }

std::string sha256_hex(const std::vector<std::uint8_t>& data) {
  return to_hex(sha256_bytes(data));
}

std::string sha256_file_hex(const std::filesystem::path& path) {
  return to_hex(sha256_file(path));
}

}  // namespace typobench
