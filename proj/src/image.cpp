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

#include "lbptex/image.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "lbptex/errors.hpp"
#include "sampling.hpp"

namespace lbptex {

namespace {

constexpr double kOffsetGrid = 1048576.0;  // 2^20

double snapToGrid(double v) { return std::round(v * kOffsetGrid) / kOffsetGrid; }

double snapTrig(double v) {
  const double r = std::round(v);
  return std::abs(v - r) < 1e-12 ? r : v;
}

}  // namespace

GrayImage::GrayImage(int width, int height, std::uint8_t fill)
    : width_(width), height_(height) {
  if (width < 0 || height < 0) {
    throw ArgumentError("image dimensions must be non-negative");
  }
  data_.assign(static_cast<std::size_t>(width) * height, fill);
}

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> data)
    : width_(width), height_(height), data_(std::move(data)) {
  if (width < 0 || height < 0) {
    throw ArgumentError("image dimensions must be non-negative");
  }
  if (data_.size() != static_cast<std::size_t>(width) * height) {
    throw ArgumentError("pixel buffer length " + std::to_string(data_.size()) +
                        " does not match " + std::to_string(width) + "x" +
                        std::to_string(height));
  }
}

std::string_view samplingModeName(SamplingMode mode) noexcept {
  return mode == SamplingMode::Nearest ? "nearest" : "bilinear";
}

SamplingMode parseSamplingMode(std::string_view name) {
  if (name == "bilinear") return SamplingMode::Bilinear;
  if (name == "nearest") return SamplingMode::Nearest;
  throw ArgumentError("unknown sampling mode '" + std::string(name) + "'");
}

void NeighborhoodSpec::validate() const {
  if (points < kMinPoints || points > kMaxPoints || points % 2 != 0) {
    throw ArgumentError("P must be even and within [" +
                        std::to_string(kMinPoints) + ", " +
                        std::to_string(kMaxPoints) + "], got " +
                        std::to_string(points));
  }
  if (!std::isfinite(radius) || radius <= 0.0) {
    throw ArgumentError("R must be a positive finite radius");
  }
}

int NeighborhoodSpec::margin() const {
  return static_cast<int>(std::ceil(radius)) + 1;
}

std::vector<SamplePoint> neighborOffsets(const NeighborhoodSpec& spec) {
  spec.validate();
  std::vector<SamplePoint> offsets(static_cast<std::size_t>(spec.points));
  for (int p = 0; p < spec.points; ++p) {
    const double angle = 2.0 * std::numbers::pi * p / spec.points;
    double dx = snapToGrid(spec.radius * std::cos(angle));
    double dy = snapToGrid(-spec.radius * std::sin(angle));
    if (spec.mode == SamplingMode::Nearest) {
      dx = std::round(dx);
      dy = std::round(dy);
    }
    // Avoid -0.0 so that printed coordinates stay tidy.
    offsets[p] = {dx + 0.0, dy + 0.0};
  }
  return offsets;
}

std::vector<SamplePoint> neighborCoordinates(const NeighborhoodSpec& spec,
                                             PixelCoord center, int width,
                                             int height) {
  spec.validate();
  const int m = spec.margin();
  if (center.x < m || center.y < m || center.x > width - 1 - m ||
      center.y > height - 1 - m) {
    throw PreconditionError("center (" + std::to_string(center.x) + "," +
                            std::to_string(center.y) + ") is within " +
                            std::to_string(m) + " pixels of the border");
  }
  std::vector<SamplePoint> pts = neighborOffsets(spec);
  for (SamplePoint& pt : pts) {
    pt.x += center.x;
    pt.y += center.y;
  }
  return pts;
}

double sampleBilinear(const GrayImage& img, SamplePoint pt) {
  const double maxX = img.width() - 1;
  const double maxY = img.height() - 1;
  if (img.empty() || !(pt.x >= 0.0 && pt.x <= maxX && pt.y >= 0.0 &&
                       pt.y <= maxY)) {
    throw BoundsError("sample point outside image bounds");
  }
  const int x0 = static_cast<int>(std::floor(pt.x));
  const int y0 = static_cast<int>(std::floor(pt.y));
  const int x1 = std::min(x0 + 1, img.width() - 1);
  const int y1 = std::min(y0 + 1, img.height() - 1);
  const double fx = pt.x - x0;
  const double fy = pt.y - y0;

  return detail::blend(img(x0, y0), img(x1, y0), img(x0, y1), img(x1, y1), fx,
                       fy);
}

double sampleNearest(const GrayImage& img, SamplePoint pt) {
  const double x = std::round(pt.x);
  const double y = std::round(pt.y);
  if (img.empty() || !(x >= 0.0 && x <= img.width() - 1 && y >= 0.0 &&
                       y <= img.height() - 1)) {
    throw BoundsError("sample point outside image bounds");
  }
  return img(static_cast<int>(x), static_cast<int>(y));
}

bool RotatedImage::allValid() const noexcept {
  return std::all_of(valid.begin(), valid.end(),
                     [](std::uint8_t v) { return v != 0; });
}

RotatedImage rotateImage(const GrayImage& img, double angleDegrees) {
  RotatedImage out{GrayImage(img.width(), img.height()),
                   std::vector<std::uint8_t>(img.size(), 0)};
  if (img.empty()) return out;

  const double theta = angleDegrees * std::numbers::pi / 180.0;
  const double cosT = snapTrig(std::cos(theta));
  const double sinT = snapTrig(std::sin(theta));
  const double cx = (img.width() - 1) / 2.0;
  const double cy = (img.height() - 1) / 2.0;
  const double maxX = img.width() - 1;
  const double maxY = img.height() - 1;
  constexpr double kEdgeSlack = 1e-9;

  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      const double u = x - cx;
      const double v = y - cy;
      // Inverse mapping: displayed counter-clockwise rotation with y down.
      double sx = cx + u * cosT - v * sinT;
      double sy = cy + u * sinT + v * cosT;
      if (sx < -kEdgeSlack || sx > maxX + kEdgeSlack || sy < -kEdgeSlack ||
          sy > maxY + kEdgeSlack) {
        continue;
      }
      sx = std::clamp(sx, 0.0, maxX);
      sy = std::clamp(sy, 0.0, maxY);
      const double value = sampleBilinear(img, {sx, sy});
      out.image(x, y) =
          static_cast<std::uint8_t>(std::clamp(std::lround(value), 0L, 255L));
      out.valid[static_cast<std::size_t>(y) * img.width() + x] = 1;
    }
  }
  return out;
}

GrayImage cropCenter(const GrayImage& img, int width, int height) {
  if (width <= 0 || height <= 0 || width > img.width() ||
      height > img.height()) {
    throw ArgumentError("crop " + std::to_string(width) + "x" +
                        std::to_string(height) + " does not fit in " +
                        std::to_string(img.width()) + "x" +
                        std::to_string(img.height()));
  }
  const int x0 = (img.width() - width) / 2;
  const int y0 = (img.height() - height) / 2;
  GrayImage out(width, height);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) out(x, y) = img(x0 + x, y0 + y);
  }
  return out;
}

GrayImage cropValidSquare(const RotatedImage& rotated) {
  const GrayImage& img = rotated.image;
  const int w = img.width();
  const auto isValid = [&](int x, int y) {
    return rotated.valid[static_cast<std::size_t>(y) * w + x] != 0;
  };
  // The valid region is convex, so a square is valid iff its outline is.
  for (int side = std::min(img.width(), img.height()); side > 0; --side) {
    const int x0 = (img.width() - side) / 2;
    const int y0 = (img.height() - side) / 2;
    const int x1 = x0 + side - 1;
    const int y1 = y0 + side - 1;
    bool ok = true;
    for (int i = 0; i < side && ok; ++i) {
      ok = isValid(x0 + i, y0) && isValid(x0 + i, y1) && isValid(x0, y0 + i) &&
           isValid(x1, y0 + i);
    }
    if (ok) return cropCenter(img, side, side);
  }
  throw DegenerateDataError("rotated image has no valid pixels");
}

GrayImage addGaussianNoise(const GrayImage& img, double variance,
                           std::uint64_t seed) {
  if (!(variance >= 0.0) || !std::isfinite(variance)) {
    throw ArgumentError("noise variance must be non-negative");
  }
  if (variance == 0.0) return img;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, std::sqrt(variance));
  GrayImage out = img;
  for (std::uint8_t& px : out.pixels()) {
    const double v = std::clamp(px / 255.0 + noise(rng), 0.0, 1.0);
    px = static_cast<std::uint8_t>(std::lround(v * 255.0));
  }
  return out;
}

GrayImage applyMonotoneMap(const GrayImage& img, const LookupTable& table) {
  for (std::size_t i = 1; i < table.size(); ++i) {
    if (table[i] < table[i - 1]) {
      throw ArgumentError("lookup table decreases at entry " +
                          std::to_string(i));
    }
  }
  GrayImage out = img;
  for (std::uint8_t& px : out.pixels()) px = table[px];
  return out;
}

LookupTable identityTable() {
  LookupTable t{};
  for (int i = 0; i < 256; ++i) t[i] = static_cast<std::uint8_t>(i);
  return t;
}

LookupTable composeTables(const LookupTable& first, const LookupTable& second) {
  LookupTable t{};
  for (int i = 0; i < 256; ++i) t[i] = second[first[i]];
  return t;
}

}  // namespace lbptex
