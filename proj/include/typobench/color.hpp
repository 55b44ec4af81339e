// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace typobench {

struct RgbColor {
  std::string name;
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  bool operator==(const RgbColor& other) const = default;
};

// The 23 overlay colors in canonical sweep order: the seven base hues, their
// dark variants, their light variants, then white and black. Dark variants
// are the midpoint blend of the hue with black, light variants the midpoint
// blend with white, both rounded half away from zero.
const std::vector<RgbColor>& color_palette();

// Names only, in the same order.
std::vector<std::string> color_names();

// Throws UnknownColor for names outside the palette.
const RgbColor& color_by_name(std::string_view name);

}  // namespace typobench
