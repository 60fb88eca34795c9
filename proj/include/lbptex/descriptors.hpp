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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lbptex/image.hpp"

namespace lbptex {

/// P-bit binary pattern; bit p carries weight 2^p.
struct PatternCode {
  std::uint32_t value = 0;
  int length = 0;

  bool bit(int p) const noexcept { return ((value >> p) & 1U) != 0; }
  bool operator==(const PatternCode&) const = default;
};

/// Ternary pattern split into its +1 (upper) and -1 (lower) binary halves.
struct TernaryCode {
  std::vector<std::int8_t> trits;
  PatternCode upper;
  PatternCode lower;
};

struct ClbpComponents {
  PatternCode sign;
  PatternCode magnitude;
  bool center = false;
};

// Per-pixel kernels. `neighbors` is ordered by p and its size is P.

/// Bit p = 1 iff neighbors[p] >= center.
PatternCode lbpCode(double center, std::span<const double> neighbors);

/// Minimum over all P circular right rotations.
std::uint32_t rorMin(PatternCode code);

/// Circular 0/1 transition count, including the (P-1, 0) pair.
int uniformity(PatternCode code);

/// popcount for patterns with at most two transitions, P + 1 otherwise.
std::uint32_t uniformLabel(PatternCode code);

/// Uniform codes keep their uniform label; non-uniform codes land in a
/// block after it, indexed by max(#ones, #zeros).
std::uint32_t numLabel(PatternCode code);
std::uint32_t numLabelSpace(int points);

/// Thresholds the neighbors at their own mean.
PatternCode niCode(std::span<const double> neighbors);

/// Number of neighbors >= the median of {center} and the neighbors.
std::uint32_t medLabel(double center, std::span<const double> neighbors);

/// Opposite-pair comparisons in the low P/2 bits and center vs. overall mean
/// in bit P/2, each using s(x) = 1 iff |x| >= threshold.
std::uint32_t cenCode(double center, std::span<const double> neighbors,
                      double threshold);

TernaryCode ltpCodes(double center, std::span<const double> neighbors,
                     double tolerance);

ClbpComponents clbpComponents(double center, std::span<const double> neighbors,
                              double magnitudeThreshold,
                              double centerThreshold);

/// Sum of neighbors >= center minus sum of neighbors < center.
double contrastCi(double center, std::span<const double> neighbors);

enum class Variant {
  Classic,
  Circ,
  Min,
  MinInterp,
  Uni,
  Num,
  Ni,
  Med,
  Cen,
  Ltp,
  Clbp,
  Dom,
};

std::string_view variantName(Variant v) noexcept;
Variant parseVariant(std::string_view name);
std::span<const Variant> allVariants() noexcept;

struct VariantParams {
  Variant variant = Variant::Circ;
  NeighborhoodSpec spec;
  int tolerance = 1;     // ltp interval t
  int cenThreshold = 3;  // cen threshold c
  // Canonicalize ni codes with rorMin (rotation experiments).
  bool niRotationInvariant = false;

  void validate() const;
};

/// Sampling mode a variant actually uses: classic and min never
/// interpolate, min_interp always does, the rest follow spec.mode.
SamplingMode effectiveMode(const VariantParams& params) noexcept;

/// Dense rank of every rorMin canonical value among the 2^P codes, so that
/// rotation-invariant labels index a compact histogram.
const std::vector<std::uint32_t>& canonicalRankTable(int points);
std::uint32_t canonicalClassCount(int points);

/// Per-pixel labels over the interior (image minus a margin of
/// spec.margin() on every side).
struct LabelMap {
  int width = 0;
  int height = 0;
  std::vector<std::uint32_t> labels;
  std::uint32_t labelSpace = 0;
  std::string variant;

  std::uint32_t operator()(int x, int y) const noexcept {
    return labels[static_cast<std::size_t>(y) * width + x];
  }
};

/// Label maps for the selected variant. Most variants yield one map;
/// ltp yields {upper, lower}; clbp yields {sign, magnitude, center}.
/// Throws ArgumentError when the image has no interior.
std::vector<LabelMap> computeLabelMaps(const GrayImage& img,
                                       const VariantParams& params);

/// Single-map variants only; throws ArgumentError for ltp and clbp.
LabelMap computeLabelMap(const GrayImage& img, const VariantParams& params);

/// Label space of the single map produced by a single-map variant, or of
/// each binary map for ltp (2^P).
std::uint32_t labelSpace(const VariantParams& params);

/// Real-valued per-pixel contrast over the same interior as label maps.
struct ContrastMap {
  int width = 0;
  int height = 0;
  std::vector<double> values;
};

ContrastMap computeContrastMap(const GrayImage& img,
                               const NeighborhoodSpec& spec);

}  // namespace lbptex
