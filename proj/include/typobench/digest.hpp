// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace typobench {

using Sha256 = std::array<std::uint8_t, 32>;

Sha256 sha256_bytes(const void* data, std::size_t size);
Sha256 sha256_bytes(const std::string& data);
Sha256 sha256_bytes(const std::vector<std::uint8_t>& data);

// Streams the file in chunks; throws IoError if it cannot be opened.
Sha256 sha256_file(const std::filesystem::path& path);

std::string to_hex(const Sha256& digest);

std::string sha256_hex(const std::string& data);
std::string sha256_hex(const std::vector<std::uint8_t>& data);
std::string sha256_file_hex(const std::filesystem::path& path);

}  // namespace typobench
