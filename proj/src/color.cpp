// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#include "typobench/color.hpp"

#include <cmath>

#include "typobench/errors.hpp"

namespace typobench {

namespace {

std::uint8_t mid(std::uint8_t a, std::uint8_t b) {
  return static_cast<std::uint8_t>(std::lround((a + b) / 2.0));
}

std::vector<RgbColor> build_palette() {
  const RgbColor base[] = {
      {"red", 255, 0, 0},    {"orange", 255, 165, 0}, {"yellow", 255, 255, 0},
      {"green", 0, 128, 0},  {"cyan", 0, 255, 255},   {"blue", 0, 0, 255},
      {"purple", 128, 0, 128},
  };
  std::vector<RgbColor> palette;
  palette.reserve(23);
  for (const RgbColor& c : base) {
    palette.push_back(c);
  }
  for (const RgbColor& c : base) {
    palette.push_back({"d" + c.name, mid(c.r, 0), mid(c.g, 0), mid(c.b, 0)});
  }
  for (const RgbColor& c : base) {
    palette.push_back({"l" + c.name, mid(c.r, 255), mid(c.g, 255), mid(c.b, 255)});
  }
  palette.push_back({"white", 255, 255, 255});
  palette.push_back({"black", 0, 0, 0});
  return palette;
}

}  // namespace

const std::vector<RgbColor>& color_palette() {
  static const std::vector<RgbColor> palette = build_palette();
  return palette;
}

std::vector<std::string> color_names() {
  std::vector<std::string> names;
  names.reserve(color_palette().size());
  for (const RgbColor& c : color_palette()) {
    names.push_back(c.name);
  }
  return names;
}

const RgbColor& color_by_name(std::string_view name) {
  for (const RgbColor& c : color_palette()) {
    if (c.name == name) {
      return c;
    }
  }
  throw UnknownColor("color not in palette: " + std::string(name));
}

}  // namespace typobench
