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

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace lbptex {

/// 8-bit single-channel raster, row-major. Every intensity is in [0, 255] by
/// construction.
class GrayImage {
 public:
  GrayImage() = default;
  GrayImage(int width, int height, std::uint8_t fill = 0);
  GrayImage(int width, int height, std::vector<std::uint8_t> data);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  bool empty() const noexcept { return data_.empty(); }
  std::size_t size() const noexcept { return data_.size(); }

  std::uint8_t operator()(int x, int y) const noexcept {
    return data_[static_cast<std::size_t>(y) * width_ + x];
  }
  std::uint8_t& operator()(int x, int y) noexcept {
    return data_[static_cast<std::size_t>(y) * width_ + x];
  }

  std::span<const std::uint8_t> pixels() const noexcept { return data_; }
  std::span<std::uint8_t> pixels() noexcept { return data_; }

  bool operator==(const GrayImage&) const = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> data_;
};

enum class SamplingMode { Bilinear, Nearest };

std::string_view samplingModeName(SamplingMode mode) noexcept;
SamplingMode parseSamplingMode(std::string_view name);

/// Circular neighborhood of `points` samples on a circle of `radius` pixels.
struct NeighborhoodSpec {
  static constexpr int kMinPoints = 4;
  // Label tables and 2^P-bin histograms stay practical up to here.
  static constexpr int kMaxPoints = 16;

  int points = 8;
  double radius = 1.0;
  SamplingMode mode = SamplingMode::Bilinear;

  /// Throws ArgumentError unless P is even in [kMinPoints, kMaxPoints] and
  /// R is finite and positive.
  void validate() const;

  /// Border width excluded from label maps: ceil(R) + 1.
  int margin() const;
};

struct SamplePoint {
  double x = 0.0;
  double y = 0.0;
};

struct PixelCoord {
  int x = 0;
  int y = 0;
};

/// Offset of neighbor p from the center. Bilinear offsets are snapped to a
/// 2^-20 pixel grid so that interpolation arithmetic is exact in double and
/// symmetric neighborhoods stay bit-for-bit symmetric; nearest offsets are
/// rounded to integers.
std::vector<SamplePoint> neighborOffsets(const NeighborhoodSpec& spec);

/// Sampling points (x_c + R cos(2pi p/P), y_c - R sin(2pi p/P)) for
/// p = 0..P-1. Throws PreconditionError when the center is closer than
/// spec.margin() pixels to a border of a width x height image.
std::vector<SamplePoint> neighborCoordinates(const NeighborhoodSpec& spec,
                                             PixelCoord center, int width,
                                             int height);

/// Bilinear blend of the four pixels around `pt`. Exact at lattice points;
/// the result never leaves [min, max] of the contributing pixels.
/// Throws BoundsError outside [0, w-1] x [0, h-1].
double sampleBilinear(const GrayImage& img, SamplePoint pt);

/// Value at the rounded coordinate. Throws BoundsError when out of range.
double sampleNearest(const GrayImage& img, SamplePoint pt);

struct RotatedImage {
  GrayImage image;
  // 1 where the pixel maps inside the source, 0 where it was filled.
  std::vector<std::uint8_t> valid;

  bool allValid() const noexcept;
};

/// Rotates counter-clockwise (as displayed) about the image center with
/// bilinear resampling. Multiples of 90 degrees on square images reduce to
/// exact pixel permutations.
RotatedImage rotateImage(const GrayImage& img, double angleDegrees);

/// Largest centered square whose pixels are all valid.
GrayImage cropValidSquare(const RotatedImage& rotated);

/// Centered width x height crop. Throws ArgumentError if it does not fit.
GrayImage cropCenter(const GrayImage& img, int width, int height);

/// Additive zero-mean Gaussian noise applied on intensities scaled to [0, 1],
/// clipped, and mapped back to [0, 255]. Deterministic for a given seed.
GrayImage addGaussianNoise(const GrayImage& img, double variance,
                           std::uint64_t seed);

using LookupTable = std::array<std::uint8_t, 256>;

/// Pointwise remap through a nondecreasing table; throws ArgumentError
/// otherwise.
GrayImage applyMonotoneMap(const GrayImage& img, const LookupTable& table);

LookupTable identityTable();
LookupTable composeTables(const LookupTable& first, const LookupTable& second);

}  // namespace lbptex
