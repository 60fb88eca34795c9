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
#include <vector>

#include "lbptex/descriptors.hpp"
#include "lbptex/metrics.hpp"

namespace lbptex {

struct Histogram {
  std::string variant;
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;

  std::size_t bins() const noexcept { return counts.size(); }
  /// counts / total. Throws ArgumentError when total is zero.
  ProbVector normalized() const;
};

/// Label occurrence counts with one bin per label of map.labelSpace.
/// Throws ArgumentError for an empty map and DataError for a label outside
/// the label space.
Histogram buildHistogram(const LabelMap& map);

/// Equal-population bin edges for contrast values.
class CIQuantizer {
 public:
  CIQuantizer() = default;
  /// Edges must be strictly ascending.
  explicit CIQuantizer(std::vector<double> edges);

  std::uint32_t bins() const noexcept {
    return static_cast<std::uint32_t>(edges_.size() + 1);
  }
  const std::vector<double>& edges() const noexcept { return edges_; }

  /// Number of edges <= value.
  std::uint32_t quantize(double value) const noexcept;

 private:
  std::vector<double> edges_;
};

/// Places each edge at the midpoint between adjacent order statistics
/// closest to rank k * n / bins. Throws DegenerateDataError when fewer than
/// `bins` distinct values are available.
CIQuantizer fitCiQuantizer(std::span<const double> values, int bins);

LabelMap quantizeContrastMap(const ContrastMap& map, const CIQuantizer& q);

/// Joint (label, contrast bin) histogram; bin = label * ciBins + ciBin.
/// Throws ArgumentError when the grids differ in size.
Histogram jointHistogram(const LabelMap& labels, const LabelMap& ciBins);

/// Each non-empty part is normalized on its own, then the parts are
/// concatenated and renormalized. Throws ArgumentError if every part is
/// empty.
ProbVector concatHistograms(std::span<const Histogram> parts);
ProbVector concatHistogram(const Histogram& first, const Histogram& second);

struct DominantFeature {
  std::vector<double> frequencies;  // descending
  double coverage = 0.0;            // sum of frequencies
};

/// Shortest descending-frequency prefix whose mass reaches `coverage`.
DominantFeature dominantPatterns(const Histogram& h, double coverage = 0.8);

/// Copies `v` and appends zeros up to `length` (never truncates).
std::vector<double> padWithZeros(std::span<const double> v, std::size_t length);

}  // namespace lbptex
