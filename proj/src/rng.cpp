// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#include "typobench/rng.hpp"

#include <string>

#include "typobench/digest.hpp"
#include "typobench/errors.hpp"

namespace typobench {

std::uint64_t bounded_uniform(SplitMix64& rng, std::uint64_t n) {
  if (n == 0) {
    throw Error("bounded_uniform requires n > 0");
  }
  // (2^64 - n) % n; draws below this threshold fall into the biased tail.
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t x = rng.next();
    if (x >= threshold) {
      return x % n;
    }
  }
}

std::uint64_t derive_stream_seed(std::uint64_t manifest_seed, std::string_view item_id) {
  std::string material = std::to_string(manifest_seed);
  material.push_back(':');
  material.append(item_id);
  const Sha256 digest = sha256_bytes(material);
  std::uint64_t seed = 0;
  for (int i = 0; i < 8; ++i) {
    seed = (seed << 8) | digest[static_cast<std::size_t>(i)];
  }
  return seed;
}

}  // namespace typobench
