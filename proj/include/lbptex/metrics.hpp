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

#include <span>
#include <string_view>
#include <vector>

namespace lbptex {

/// Nonnegative vector summing to 1 (within 1e-9).
class ProbVector {
 public:
  static constexpr double kSumTolerance = 1e-9;

  ProbVector() = default;
  /// Throws ArgumentError on negative/non-finite entries or a bad sum.
  explicit ProbVector(std::vector<double> p);

  /// Scales nonnegative weights to unit sum. Throws ArgumentError if the
  /// weights are negative or all zero.
  static ProbVector fromWeights(std::span<const double> weights);

  std::size_t size() const noexcept { return p_.size(); }
  bool empty() const noexcept { return p_.empty(); }
  double operator[](std::size_t i) const noexcept { return p_[i]; }
  std::span<const double> values() const noexcept { return p_; }

  bool operator==(const ProbVector&) const = default;

 private:
  std::vector<double> p_;
};

enum class Metric { Ordinal, KlDivergence };

std::string_view metricName(Metric m) noexcept;  // "od" / "kl"
Metric parseMetric(std::string_view name);

/// Additive smoothing applied to both inputs of klDivergence.
inline constexpr double kKlSmoothing = 1e-10;

/// sum_i B_i ln(B_i / A_i) after adding kKlSmoothing to every bin of both
/// vectors and renormalizing. `reference` is A, `test` is B.
double klDivergence(const ProbVector& reference, const ProbVector& test);

/// sum_i |sum_{j<=i} (a_j - b_j)|: the mass moved between adjacent bins to
/// turn one histogram into the other.
double ordinalDistance(const ProbVector& a, const ProbVector& b);

double distance(Metric metric, const ProbVector& reference,
                const ProbVector& test);

}  // namespace lbptex
