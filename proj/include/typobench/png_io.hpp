// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "typobench/image.hpp"

namespace typobench {

// Decodes a PNG into 8-bit RGB. Grayscale and palette images are expanded,
// 16-bit channels are reduced, and any alpha channel is dropped. Throws
// IoError on missing or malformed files.
RasterImage read_png(const std::filesystem::path& path);
RasterImage decode_png(const std::vector<std::uint8_t>& bytes);

// Encodes with pinned settings (8-bit RGB, zlib level 6, no filtering, no
// ancillary chunks) so the same pixels always produce the same bytes.
std::vector<std::uint8_t> encode_png(const RasterImage& image);
void write_png(const std::filesystem::path& path, const RasterImage& image);

}  // namespace typobench
