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

#include "lbptex/image_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>

#include "lbptex/errors.hpp"

#ifdef LBPTEX_HAVE_PNG
#include <png.h>
#endif

namespace lbptex {

namespace {

class PnmReader {
 public:
  explicit PnmReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  void skipSpaceAndComments() {
    while (pos_ < bytes_.size()) {
      const char ch = static_cast<char>(bytes_[pos_]);
      if (ch == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(ch)) != 0) {
        ++pos_;
      } else {
        return;
      }
    }
  }

  int readInt() {
    skipSpaceAndComments();
    long value = 0;
    std::size_t digits = 0;
    while (pos_ < bytes_.size() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > 1'000'000'000L) throw ImageIoError("PNM header value too large");
      ++pos_;
      ++digits;
    }
    if (digits == 0) throw ImageIoError("malformed PNM header");
    return static_cast<int>(value);
  }

  // Exactly one whitespace byte separates the header from the raster.
  void skipRasterSeparator() {
    if (pos_ >= bytes_.size() ||
        std::isspace(static_cast<unsigned char>(bytes_[pos_])) == 0) {
      throw ImageIoError("malformed PNM header");
    }
    ++pos_;
  }

  std::span<const std::uint8_t> rest() const { return bytes_.subspan(pos_); }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 2;
};

}  // namespace

std::uint8_t luminance(std::uint8_t r, std::uint8_t g, std::uint8_t b) noexcept {
  const double y = 0.299 * r + 0.587 * g + 0.114 * b;
  return static_cast<std::uint8_t>(std::min(255L, std::lround(y)));
}

GrayImage decodePnm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '6')) {
    throw ImageIoError("not a binary PGM/PPM stream");
  }
  const int channels = bytes[1] == '5' ? 1 : 3;
  PnmReader reader(bytes);
  const int width = reader.readInt();
  const int height = reader.readInt();
  const int maxval = reader.readInt();
  reader.skipRasterSeparator();
  if (width <= 0 || height <= 0) throw ImageIoError("PNM image has no pixels");
  if (maxval <= 0 || maxval > 65535) throw ImageIoError("PNM maxval out of range");

  const std::size_t sampleBytes = maxval > 255 ? 2 : 1;
  const std::size_t count = static_cast<std::size_t>(width) * height;
  const auto raster = reader.rest();
  if (raster.size() < count * channels * sampleBytes) {
    throw ImageIoError("PNM raster is truncated");
  }

  const auto sampleAt = [&](std::size_t i) -> std::uint8_t {
    int v = sampleBytes == 2 ? (raster[2 * i] << 8) | raster[2 * i + 1] : raster[i];
    if (v > maxval) throw ImageIoError("PNM sample exceeds maxval");
    if (maxval == 255) return static_cast<std::uint8_t>(v);
    return static_cast<std::uint8_t>(std::lround(v * 255.0 / maxval));
  };

  std::vector<std::uint8_t> data(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (channels == 1) {
      data[i] = sampleAt(i);
    } else {
      data[i] = luminance(sampleAt(3 * i), sampleAt(3 * i + 1), sampleAt(3 * i + 2));
    }
  }
  return GrayImage(width, height, std::move(data));
}

std::vector<std::uint8_t> encodePgm(const GrayImage& img) {
  const std::string header = "P5\n" + std::to_string(img.width()) + " " +
                             std::to_string(img.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), img.pixels().begin(), img.pixels().end());
  return out;
}

#ifdef LBPTEX_HAVE_PNG

bool pngSupported() noexcept { return true; }

GrayImage decodePng(std::span<const std::uint8_t> bytes) {
  png_image image;
  std::memset(&image, 0, sizeof(image));
  image.version = PNG_IMAGE_VERSION;
  if (png_image_begin_read_from_memory(&image, bytes.data(), bytes.size()) == 0) {
    throw ImageIoError(std::string("PNG decode failed: ") + image.message);
  }
  // Decode to 8-bit RGB and apply our own luminance rule instead of
  // libpng's gamma-aware gray conversion.
  image.format = PNG_FORMAT_RGB;
  std::vector<std::uint8_t> rgb(PNG_IMAGE_SIZE(image));
  if (png_image_finish_read(&image, nullptr, rgb.data(), 0, nullptr) == 0) {
    png_image_free(&image);
    throw ImageIoError(std::string("PNG decode failed: ") + image.message);
  }
  const int width = static_cast<int>(image.width);
  const int height = static_cast<int>(image.height);
  std::vector<std::uint8_t> data(static_cast<std::size_t>(width) * height);
  for (std::size_t i = 0; i < data.size(); ++i) {
    data[i] = luminance(rgb[3 * i], rgb[3 * i + 1], rgb[3 * i + 2]);
  }
  return GrayImage(width, height, std::move(data));
}

#else

bool pngSupported() noexcept { return false; }

GrayImage decodePng(std::span<const std::uint8_t>) {
  throw ImageIoError("PNG support was not compiled in");
}

#endif

GrayImage readImage(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ImageIoError("cannot open image '" + path.string() + "'");
  const std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in),
                                        std::istreambuf_iterator<char>()};
  static constexpr std::uint8_t kPngMagic[] = {0x89, 'P', 'N', 'G'};
  try {
    if (bytes.size() >= 4 && std::memcmp(bytes.data(), kPngMagic, 4) == 0) {
      return decodePng(bytes);
    }
    return decodePnm(bytes);
  } catch (const ImageIoError& e) {
    throw ImageIoError(path.string() + ": " + e.what());
  }
}

void writePgm(const std::filesystem::path& path, const GrayImage& img) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ImageIoError("cannot write image '" + path.string() + "'");
  const auto bytes = encodePgm(img);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw ImageIoError("short write to '" + path.string() + "'");
}

}  // namespace lbptex
