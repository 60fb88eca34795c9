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
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lbptex/metrics.hpp"

namespace lbptex {

struct ReferenceEntry {
  std::string textureId;
  ProbVector feature;
};

/// Labelled reference features compared under one metric. Ids are unique
/// and all features share one length.
class ReferenceSet {
 public:
  ReferenceSet(std::vector<ReferenceEntry> entries, Metric metric);

  const std::vector<ReferenceEntry>& entries() const noexcept { return entries_; }
  Metric metric() const noexcept { return metric_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t featureLength() const noexcept;
  /// Index of `textureId`, or size() when absent.
  std::size_t indexOf(const std::string& textureId) const noexcept;

 private:
  std::vector<ReferenceEntry> entries_;
  Metric metric_;
};

struct Match {
  std::size_t index = 0;
  std::string textureId;
  double distance = 0.0;
  std::vector<double> distances;  // one per reference, in reference order
};

using DistanceFn =
    std::function<double(const ProbVector& reference, const ProbVector& test)>;

/// Reference minimizing metric(reference, test); ties go to the lowest
/// index. Throws ArgumentError on a length mismatch.
Match nearestReference(const ProbVector& test, const ReferenceSet& refs);
Match nearestReference(const ProbVector& test, const ReferenceSet& refs,
                       const DistanceFn& distanceFn);

/// k x k grid, rows are actual classes and columns predicted classes.
class ConfusionMatrix {
 public:
  explicit ConfusionMatrix(std::vector<std::string> classes);

  std::size_t classCount() const noexcept { return classes_.size(); }
  const std::vector<std::string>& classes() const noexcept { return classes_; }

  void add(std::size_t actual, std::size_t predicted, std::uint64_t n = 1);
  std::uint64_t at(std::size_t actual, std::size_t predicted) const;

  std::uint64_t total() const noexcept;
  std::uint64_t trace() const noexcept;
  std::uint64_t rowSum(std::size_t actual) const;
  bool isDiagonal() const noexcept;

 private:
  std::vector<std::string> classes_;
  std::vector<std::uint64_t> cells_;
};

/// Counts (actual, predicted) pairs; class names default to "0".."k-1".
/// Throws ArgumentError for ids outside [0, k).
ConfusionMatrix confusionMatrix(
    std::span<const std::pair<std::size_t, std::size_t>> predictions,
    std::size_t k);

/// 100 * trace / total. Throws ArgumentError for an empty matrix.
double accuracyRate(const ConfusionMatrix& m);

/// Two decimals, e.g. "91.21".
std::string formatAccuracy(double percent);

/// Header row and first column carry the class names.
std::string confusionToCsv(const ConfusionMatrix& m);

}  // namespace lbptex
