// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string_view>

namespace typobench {

// Deterministic 64-bit generator (splitmix64). The standard library engines
// are portable but the distributions are not, so all sampling here goes
// through bounded_uniform below to keep drawn values identical across
// platforms and standard library implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// Uniform draw in [0, n). Rejection sampling removes modulo bias; the
// accepted range is a whole multiple of n.
std::uint64_t bounded_uniform(SplitMix64& rng, std::uint64_t n);

// Derives an independent stream seed from a manifest seed and an item id by
// hashing, so that per-item draws are stable no matter how many items the
// corpus holds or in which order they appear.
std::uint64_t derive_stream_seed(std::uint64_t manifest_seed, std::string_view item_id);

}  // namespace typobench
