// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace typobench {

inline constexpr int kGridRows = 4;
inline constexpr int kGridCols = 4;

// One cell of the 4x4 placement grid, rows and columns counted from 1.
struct GridCell {
  int row = 1;
  int col = 1;

  bool operator==(const GridCell& other) const = default;
};

// "R2C3" style names.
std::string format_cell(GridCell cell);
GridCell parse_cell(std::string_view name);  // throws Error on bad names

// All 16 cells in row-major sweep order: R1C1, R1C2, ..., R4C4.
const std::vector<GridCell>& grid_cells();

// Half-open pixel rectangle of a cell. The floor divisions guarantee the 16
// regions tile the image exactly, with the remainder pixels absorbed by the
// last row and column.
struct CellRegion {
  int x0 = 0;
  int y0 = 0;
  int x1 = 0;
  int y1 = 0;
};

CellRegion cell_region(int image_w, int image_h, GridCell cell);

// Top-left pixel where a glyph of the given size should be drawn so that it
// is centered in the cell, then clamped so the glyph stays fully inside the
// image. Throws GlyphLargerThanImage when no placement exists.
struct Anchor {
  int x = 0;
  int y = 0;

  bool operator==(const Anchor& other) const = default;
};

Anchor anchor_in_cell(int image_w, int image_h, int glyph_w, int glyph_h, GridCell cell);

}  // namespace typobench
