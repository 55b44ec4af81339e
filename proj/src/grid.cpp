// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#include "typobench/grid.hpp"

#include <algorithm>

#include "typobench/errors.hpp"

namespace typobench {

namespace {

// Floor division for possibly negative numerators; integer `/` truncates
// toward zero, which is wrong for centering glyphs wider than their cell.
int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) {
    --q;
  }
  return q;
}

}  // namespace

std::string format_cell(GridCell cell) {
  return "R" + std::to_string(cell.row) + "C" + std::to_string(cell.col);
}

GridCell parse_cell(std::string_view name) {
  if (name.size() == 4 && name[0] == 'R' && name[2] == 'C') {
    const int row = name[1] - '0';
    const int col = name[3] - '0';
    if (row >= 1 && row <= kGridRows && col >= 1 && col <= kGridCols) {
      return GridCell{row, col};
    }
  }
  throw Error("bad grid cell name: " + std::string(name));
}

const std::vector<GridCell>& grid_cells() {
  static const std::vector<GridCell> cells = [] {
    std::vector<GridCell> out;
    for (int r = 1; r <= kGridRows; ++r) {
      for (int c = 1; c <= kGridCols; ++c) {
        out.push_back(GridCell{r, c});
      }
    }
    return out;
  }();
  return cells;
}

CellRegion cell_region(int image_w, int image_h, GridCell cell) {
  if (image_w <= 0 || image_h <= 0) {
    throw Error("cell_region requires a non-empty image");
  }
  CellRegion region;
  region.x0 = (cell.col - 1) * image_w / kGridCols;
  region.x1 = cell.col * image_w / kGridCols;
  region.y0 = (cell.row - 1) * image_h / kGridRows;
  region.y1 = cell.row * image_h / kGridRows;
  return region;
}

Anchor anchor_in_cell(int image_w, int image_h, int glyph_w, int glyph_h, GridCell cell) {
  if (glyph_w <= 0 || glyph_h <= 0) {
    throw Error("anchor_in_cell requires a non-empty glyph");
  }
  if (glyph_w > image_w || glyph_h > image_h) {
    throw GlyphLargerThanImage("glyph " + std::to_string(glyph_w) + "x" + std::to_string(glyph_h) +
                               " exceeds image " + std::to_string(image_w) + "x" +
                               std::to_string(image_h));
  }
  const CellRegion region = cell_region(image_w, image_h, cell);
  int x = region.x0 + floor_div(region.x1 - region.x0 - glyph_w, 2);
  int y = region.y0 + floor_div(region.y1 - region.y0 - glyph_h, 2);
  x = std::clamp(x, 0, image_w - glyph_w);
  y = std::clamp(y, 0, image_h - glyph_h);
  return Anchor{x, y};
}

}  // namespace typobench
