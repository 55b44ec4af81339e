// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>

#include "typobench/image.hpp"

namespace typobench {

// Minimal TrueType renderer. It reads the tables needed to turn a short
// UTF-8 string into an antialiased coverage mask: cmap (format 4), glyf with
// simple and composite outlines, loca, hmtx for advances, head and maxp for
// layout parameters. There is no hinting and no kerning; glyphs advance by
// their metrics alone. This is enough for single-line overlay words and
// keeps the renderer fully deterministic.
class Font {
 public:
  // Throws UnresolvableFont on missing files or unusable tables.
  static Font load(const std::filesystem::path& path);

  Font(Font&&) noexcept;
  Font& operator=(Font&&) noexcept;
  ~Font();

  int units_per_em() const;

  // Renders `text` at the given pixel size. The bitmap is the tight bounding
  // box of the ink; callers place it with the returned mask only, so there
  // is no baseline or bearing in the result. Whitespace-only text yields a
  // zero-coverage bitmap sized by the advance width. Size is the em size in
  // pixels and must be positive. Throws EmptyText for empty input.
  GlyphBitmap rasterize(std::string_view text, int size_px) const;

 private:
  Font();
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Convenience wrapper matching the data-flow of the synthesis pipeline.
GlyphBitmap rasterize_typo(const Font& font, std::string_view text, int size_px);

}  // namespace typobench
