// Copyright 2026 The lbptex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "lbptex/image.hpp"

namespace lbptex {

/// Luminance of an RGB triple: round(0.299 R + 0.587 G + 0.114 B).
std::uint8_t luminance(std::uint8_t r, std::uint8_t g, std::uint8_t b) noexcept;

/// Decodes binary PGM (P5) or PPM (P6). Color input is reduced to luminance
/// and maxval other than 255 is rescaled to 8 bits. Throws ImageIoError.
GrayImage decodePnm(std::span<const std::uint8_t> bytes);

/// Binary P5 encoding with maxval 255.
std::vector<std::uint8_t> encodePgm(const GrayImage& img);

bool pngSupported() noexcept;

/// Decodes PNG (gray, gray+alpha, RGB, RGBA, palette). Throws ImageIoError,
/// including when the library was built without libpng.
GrayImage decodePng(std::span<const std::uint8_t> bytes);

/// Reads a PGM/PPM/PNG file, detected by content.
GrayImage readImage(const std::filesystem::path& path);

void writePgm(const std::filesystem::path& path, const GrayImage& img);

}  // namespace lbptex
