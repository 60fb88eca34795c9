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

#include "lbptex/metrics.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "lbptex/errors.hpp"

namespace lbptex {

namespace {

void checkEntries(std::span<const double> v) {
  for (double x : v) {
    if (!std::isfinite(x) || x < 0.0) {
      throw ArgumentError("probability entries must be finite and >= 0");
    }
  }
}

void checkSameLength(const ProbVector& a, const ProbVector& b) {
  if (a.size() != b.size()) {
    throw ArgumentError("histogram lengths differ: " + std::to_string(a.size()) +
                        " vs " + std::to_string(b.size()));
  }
}

}  // namespace

ProbVector::ProbVector(std::vector<double> p) : p_(std::move(p)) {
  checkEntries(p_);
  const double sum = std::accumulate(p_.begin(), p_.end(), 0.0);
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw ArgumentError("probability vector sums to " + std::to_string(sum));
  }
}

ProbVector ProbVector::fromWeights(std::span<const double> weights) {
  checkEntries(weights);
  const double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (!(sum > 0.0)) throw ArgumentError("cannot normalize all-zero weights");
  std::vector<double> p(weights.begin(), weights.end());
  for (double& x : p) x /= sum;
  ProbVector out;
  out.p_ = std::move(p);
  return out;
}

std::string_view metricName(Metric m) noexcept {
  return m == Metric::KlDivergence ? "kl" : "od";
}

Metric parseMetric(std::string_view name) {
  if (name == "od") return Metric::Ordinal;
  if (name == "kl") return Metric::KlDivergence;
  throw ArgumentError("unknown metric '" + std::string(name) + "'");
}

double klDivergence(const ProbVector& reference, const ProbVector& test) {
  checkSameLength(reference, test);
  const double norm = 1.0 + kKlSmoothing * static_cast<double>(test.size());
  double d = 0.0;
  for (std::size_t i = 0; i < test.size(); ++i) {
    const double a = (reference[i] + kKlSmoothing) / norm;
    const double b = (test[i] + kKlSmoothing) / norm;
    d += b * std::log(b / a);
  }
  return d;
}

double ordinalDistance(const ProbVector& a, const ProbVector& b) {
  checkSameLength(a, b);
  double carried = 0.0;
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    carried += a[i] - b[i];
    d += std::abs(carried);
  }
  return d;
}

double distance(Metric metric, const ProbVector& reference,
                const ProbVector& test) {
  return metric == Metric::KlDivergence ? klDivergence(reference, test)
                                        : ordinalDistance(reference, test);
}

}  // namespace lbptex
