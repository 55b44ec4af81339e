// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#include "typobench/compose.hpp"

#include <string>

#include "typobench/errors.hpp"

namespace typobench {

void composite_into(RasterImage& image, const GlyphBitmap& glyph, const RgbColor& color,
                    int opacity_percent, Anchor anchor) {
  if (opacity_percent < 0 || opacity_percent > 100) {
    throw Error("opacity must be in [0, 100]: " + std::to_string(opacity_percent));
  }
  if (anchor.x < 0 || anchor.y < 0 || anchor.x + glyph.width > image.width ||
      anchor.y + glyph.height > image.height) {
    throw AnchorOutOfBounds("overlay at (" + std::to_string(anchor.x) + "," +
                            std::to_string(anchor.y) + ") size " + std::to_string(glyph.width) +
                            "x" + std::to_string(glyph.height) + " exceeds image " +
                            std::to_string(image.width) + "x" + std::to_string(image.height));
  }
  const double alpha = opacity_percent / 100.0;
  for (int gy = 0; gy < glyph.height; ++gy) {
    for (int gx = 0; gx < glyph.width; ++gx) {
      const float a = glyph.at(gx, gy);
      if (a <= 0.0f) {
        continue;
      }
      std::uint8_t* px = image.at(anchor.x + gx, anchor.y + gy);
      px[0] = static_cast<std::uint8_t>(blend_channel(color.r, px[0], alpha, a));
      px[1] = static_cast<std::uint8_t>(blend_channel(color.g, px[1], alpha, a));
      px[2] = static_cast<std::uint8_t>(blend_channel(color.b, px[2], alpha, a));
    }
  }
}

RasterImage composite(const RasterImage& base, const GlyphBitmap& glyph, const RgbColor& color,
                      int opacity_percent, Anchor anchor) {
  RasterImage out = base;
  composite_into(out, glyph, color, opacity_percent, anchor);
  return out;
}

}  // namespace typobench
