// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "typobench/color.hpp"
#include "typobench/grid.hpp"
#include "typobench/image.hpp"

namespace typobench {

// Draws the coverage mask over the base image at the given anchor with
// source-over blending. `opacity_percent` is in [0, 100]. Pixels whose
// coverage is zero are guaranteed bit-identical to the base. Throws
// AnchorOutOfBounds if the mask would extend past the image.
RasterImage composite(const RasterImage& base, const GlyphBitmap& glyph, const RgbColor& color,
                      int opacity_percent, Anchor anchor);

// In-place variant used by the batch renderer.
void composite_into(RasterImage& image, const GlyphBitmap& glyph, const RgbColor& color,
                    int opacity_percent, Anchor anchor);

}  // namespace typobench
