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

#include "lbptex/descriptors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "lbptex/errors.hpp"

namespace lbptex {

namespace {

constexpr int kMaxCodeBits = 32;

int checkedLength(std::span<const double> neighbors) {
  if (neighbors.empty() || neighbors.size() > kMaxCodeBits) {
    throw ArgumentError("expected between 1 and 32 neighbors, got " +
                        std::to_string(neighbors.size()));
  }
  return static_cast<int>(neighbors.size());
}

std::uint32_t lowMask(int length) {
  return length >= 32 ? 0xFFFFFFFFU : ((1U << length) - 1U);
}

}  // namespace

PatternCode lbpCode(double center, std::span<const double> neighbors) {
  const int n = checkedLength(neighbors);
  std::uint32_t value = 0;
  for (int p = 0; p < n; ++p) {
    if (neighbors[p] >= center) value |= 1U << p;
  }
  return {value, n};
}

std::uint32_t rorMin(PatternCode code) {
  const int n = code.length;
  const std::uint32_t mask = lowMask(n);
  std::uint32_t v = code.value & mask;
  std::uint32_t best = v;
  for (int i = 1; i < n; ++i) {
    v = ((v >> 1) | ((v & 1U) << (n - 1))) & mask;
    best = std::min(best, v);
  }
  return best;
}

int uniformity(PatternCode code) {
  int transitions = 0;
  for (int p = 0; p < code.length; ++p) {
    if (code.bit(p) != code.bit((p + 1) % code.length)) ++transitions;
  }
  return transitions;
}

std::uint32_t uniformLabel(PatternCode code) {
  if (uniformity(code) <= 2) {
    return static_cast<std::uint32_t>(std::popcount(code.value & lowMask(code.length)));
  }
  return static_cast<std::uint32_t>(code.length + 1);
}

std::uint32_t numLabel(PatternCode code) {
  const int ones = std::popcount(code.value & lowMask(code.length));
  if (uniformity(code) <= 2) return static_cast<std::uint32_t>(ones);
  const int zeros = code.length - ones;
  // Ties take the ones branch; the count is the same either way.
  const int group = ones >= zeros ? ones : zeros;
  const int firstGroup = (code.length + 1) / 2;
  return static_cast<std::uint32_t>(code.length + 1 + (group - firstGroup));
}

std::uint32_t numLabelSpace(int points) {
  const int groups = points - 2 - (points + 1) / 2 + 1;
  return static_cast<std::uint32_t>(points + 1 + std::max(groups, 0));
}

PatternCode niCode(std::span<const double> neighbors) {
  const int n = checkedLength(neighbors);
  const double mean =
      std::accumulate(neighbors.begin(), neighbors.end(), 0.0) / n;
  std::uint32_t value = 0;
  for (int p = 0; p < n; ++p) {
    if (neighbors[p] >= mean) value |= 1U << p;
  }
  return {value, n};
}

std::uint32_t medLabel(double center, std::span<const double> neighbors) {
  const int n = checkedLength(neighbors);
  std::array<double, kMaxCodeBits + 1> values{};
  values[0] = center;
  std::copy(neighbors.begin(), neighbors.end(), values.begin() + 1);
  const auto begin = values.begin();
  const auto end = begin + n + 1;
  std::sort(begin, end);
  const int count = n + 1;
  const double median = count % 2 == 1
                            ? values[count / 2]
                            : 0.5 * (values[count / 2 - 1] + values[count / 2]);
  return static_cast<std::uint32_t>(
      std::count_if(neighbors.begin(), neighbors.end(),
                    [median](double g) { return g >= median; }));
}

std::uint32_t cenCode(double center, std::span<const double> neighbors,
                      double threshold) {
  const int n = checkedLength(neighbors);
  if (n % 2 != 0) {
    throw ArgumentError("centralized LBP needs an even number of neighbors");
  }
  if (!(threshold >= 0.0)) throw ArgumentError("cen threshold must be >= 0");
  const int half = n / 2;
  std::uint32_t value = 0;
  for (int p = 0; p < half; ++p) {
    if (std::abs(neighbors[p] - neighbors[p + half]) >= threshold) value |= 1U << p;
  }
  const double total =
      (center + std::accumulate(neighbors.begin(), neighbors.end(), 0.0)) /
      (n + 1);
  if (std::abs(center - total) >= threshold) value |= 1U << half;
  return value;
}

TernaryCode ltpCodes(double center, std::span<const double> neighbors,
                     double tolerance) {
  const int n = checkedLength(neighbors);
  if (!(tolerance >= 0.0)) throw ArgumentError("ltp tolerance must be >= 0");
  TernaryCode code;
  code.trits.resize(static_cast<std::size_t>(n));
  code.upper.length = n;
  code.lower.length = n;
  for (int p = 0; p < n; ++p) {
    const double diff = neighbors[p] - center;
    if (diff > tolerance) {
      code.trits[p] = 1;
      code.upper.value |= 1U << p;
    } else if (diff < -tolerance) {
      code.trits[p] = -1;
      code.lower.value |= 1U << p;
    }
  }
  return code;
}

ClbpComponents clbpComponents(double center, std::span<const double> neighbors,
                              double magnitudeThreshold,
                              double centerThreshold) {
  const int n = checkedLength(neighbors);
  ClbpComponents out;
  out.sign.length = n;
  out.magnitude.length = n;
  for (int p = 0; p < n; ++p) {
    const double d = neighbors[p] - center;
    if (d >= 0.0) out.sign.value |= 1U << p;
    if (std::abs(d) >= magnitudeThreshold) out.magnitude.value |= 1U << p;
  }
  out.center = center >= centerThreshold;
  return out;
}

double contrastCi(double center, std::span<const double> neighbors) {
  checkedLength(neighbors);
  double greater = 0.0;
  double lesser = 0.0;
  for (double g : neighbors) {
    if (g >= center) {
      greater += g;
    } else {
      lesser += g;
    }
  }
  return greater - lesser;
}

namespace {

struct VariantEntry {
  Variant variant;
  std::string_view name;
};

constexpr std::array<VariantEntry, 12> kVariants{{
    {Variant::Classic, "classic"},
    {Variant::Circ, "circ"},
    {Variant::Min, "min"},
    {Variant::MinInterp, "min_interp"},
    {Variant::Uni, "uni"},
    {Variant::Num, "num"},
    {Variant::Ni, "ni"},
    {Variant::Med, "med"},
    {Variant::Cen, "cen"},
    {Variant::Ltp, "ltp"},
    {Variant::Clbp, "clbp"},
    {Variant::Dom, "dom"},
}};

constexpr std::array<Variant, 12> kVariantList{
    Variant::Classic, Variant::Circ, Variant::Min, Variant::MinInterp,
    Variant::Uni,     Variant::Num,  Variant::Ni,  Variant::Med,
    Variant::Cen,     Variant::Ltp,  Variant::Clbp, Variant::Dom};

}  // namespace

std::string_view variantName(Variant v) noexcept {
  for (const auto& e : kVariants) {
    if (e.variant == v) return e.name;
  }
  return "unknown";
}

Variant parseVariant(std::string_view name) {
  for (const auto& e : kVariants) {
    if (e.name == name) return e.variant;
  }
  throw ArgumentError("unknown LBP variant '" + std::string(name) + "'");
}

std::span<const Variant> allVariants() noexcept { return kVariantList; }

void VariantParams::validate() const {
  spec.validate();
  if (tolerance < 0) throw ArgumentError("ltp tolerance t must be >= 0");
  if (cenThreshold < 0) throw ArgumentError("cen threshold c must be >= 0");
}

SamplingMode effectiveMode(const VariantParams& params) noexcept {
  switch (params.variant) {
    case Variant::Classic:
    case Variant::Min:
      return SamplingMode::Nearest;
    case Variant::MinInterp:
      return SamplingMode::Bilinear;
    default:
      return params.spec.mode;
  }
}

}  // namespace lbptex
