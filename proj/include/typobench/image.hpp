// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace typobench {

// Plain 8-bit RGB image, rows top to bottom.
struct RasterImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> rgb;  // 3 * width * height bytes

  static RasterImage filled(int w, int h, std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    RasterImage img;
    img.width = w;
    img.height = h;
    img.rgb.resize(3 * static_cast<std::size_t>(w) * h);
    for (std::size_t i = 0; i < img.rgb.size(); i += 3) {
      img.rgb[i] = r;
      img.rgb[i + 1] = g;
      img.rgb[i + 2] = b;
    }
    return img;
  }

  std::uint8_t* at(int x, int y) { return rgb.data() + 3 * (static_cast<std::size_t>(y) * width + x); }
  const std::uint8_t* at(int x, int y) const {
    return rgb.data() + 3 * (static_cast<std::size_t>(y) * width + x);
  }

  bool operator==(const RasterImage& other) const = default;
};

// Antialiased coverage mask for a rendered text string. Values are in [0, 1]
// where 0 means the pixel is untouched and 1 means full ink.
struct GlyphBitmap {
  int width = 0;
  int height = 0;
  std::vector<float> coverage;  // width * height values

  float at(int x, int y) const { return coverage[static_cast<std::size_t>(y) * width + x]; }

  bool operator==(const GlyphBitmap& other) const = default;
};

// Source-over blend of one channel. `alpha` is the overlay opacity in [0, 1]
// and `a` the glyph coverage in [0, 1]; the product acts as the effective
// alpha. Rounding is half away from zero via lround so every platform
// produces the same byte.
inline int blend_channel(int fg, int bg, double alpha, double a) {
  const double w = alpha * a;
  return static_cast<int>(std::lround(w * fg + (1.0 - w) * bg));
}

}  // namespace typobench
