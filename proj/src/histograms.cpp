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

#include "lbptex/histograms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "lbptex/errors.hpp"

namespace lbptex {

ProbVector Histogram::normalized() const {
  if (total == 0) throw ArgumentError("histogram '" + variant + "' is empty");
  std::vector<double> p(counts.size());
  const double denom = static_cast<double>(total);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    p[i] = static_cast<double>(counts[i]) / denom;
  }
  return ProbVector::fromWeights(p);
}

Histogram buildHistogram(const LabelMap& map) {
  if (map.labels.empty()) {
    throw ArgumentError("label map '" + map.variant + "' has no pixels");
  }
  Histogram h;
  h.variant = map.variant;
  h.counts.assign(map.labelSpace, 0);
  for (std::uint32_t label : map.labels) {
    if (label >= map.labelSpace) {
      throw DataError("label " + std::to_string(label) + " outside label space " +
                      std::to_string(map.labelSpace) + " of '" + map.variant +
                      "'");
    }
    ++h.counts[label];
  }
  h.total = map.labels.size();
  return h;
}

CIQuantizer::CIQuantizer(std::vector<double> edges) : edges_(std::move(edges)) {
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (!(edges_[i] > edges_[i - 1])) {
      throw ArgumentError("quantizer edges must be strictly ascending");
    }
  }
}

std::uint32_t CIQuantizer::quantize(double value) const noexcept {
  return static_cast<std::uint32_t>(
      std::upper_bound(edges_.begin(), edges_.end(), value) - edges_.begin());
}

CIQuantizer fitCiQuantizer(std::span<const double> values, int bins) {
  if (bins < 1) throw ArgumentError("contrast bin count must be >= 1");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());

  // Candidate cuts sit between adjacent distinct values; `below[j]` is how
  // many samples fall under cut j.
  std::vector<double> cuts;
  std::vector<std::size_t> below;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] != sorted[i - 1]) {
      cuts.push_back(0.5 * (sorted[i - 1] + sorted[i]));
      below.push_back(i);
    }
  }
  const std::size_t distinct = sorted.empty() ? 0 : cuts.size() + 1;
  if (distinct < static_cast<std::size_t>(bins)) {
    throw DegenerateDataError("need at least " + std::to_string(bins) +
                              " distinct contrast values, got " +
                              std::to_string(distinct));
  }

  const std::size_t n = sorted.size();
  const std::size_t b = static_cast<std::size_t>(bins);
  std::vector<double> edges;
  edges.reserve(b - 1);
  std::size_t lo = 0;
  for (std::size_t k = 1; k < b; ++k) {
    // Target rank round(n k / b) in integer arithmetic.
    const std::size_t target = (2 * n * k + b) / (2 * b);
    // Leave enough cuts for the remaining edges.
    const std::size_t hi = cuts.size() - (b - 1 - k);
    auto it = std::lower_bound(below.begin() + lo, below.begin() + hi, target);
    std::size_t j = static_cast<std::size_t>(it - below.begin());
    if (j == hi) {
      j = hi - 1;
    } else if (j > lo && target - below[j - 1] <= below[j] - target) {
      --j;
    }
    edges.push_back(cuts[j]);
    lo = j + 1;
  }
  return CIQuantizer(std::move(edges));
}

LabelMap quantizeContrastMap(const ContrastMap& map, const CIQuantizer& q) {
  LabelMap out;
  out.width = map.width;
  out.height = map.height;
  out.labelSpace = q.bins();
  out.variant = "ci";
  out.labels.resize(map.values.size());
  std::transform(map.values.begin(), map.values.end(), out.labels.begin(),
                 [&q](double v) { return q.quantize(v); });
  return out;
}

Histogram jointHistogram(const LabelMap& labels, const LabelMap& ciBins) {
  if (labels.width != ciBins.width || labels.height != ciBins.height ||
      labels.labels.size() != ciBins.labels.size()) {
    throw ArgumentError("joint histogram needs equally sized grids");
  }
  if (labels.labels.empty()) throw ArgumentError("label map has no pixels");
  Histogram h;
  h.variant = labels.variant + "+ci";
  const std::uint64_t space =
      static_cast<std::uint64_t>(labels.labelSpace) * ciBins.labelSpace;
  h.counts.assign(space, 0);
  for (std::size_t i = 0; i < labels.labels.size(); ++i) {
    const std::uint32_t l = labels.labels[i];
    const std::uint32_t c = ciBins.labels[i];
    if (l >= labels.labelSpace || c >= ciBins.labelSpace) {
      throw DataError("label outside label space in joint histogram");
    }
    ++h.counts[static_cast<std::size_t>(l) * ciBins.labelSpace + c];
  }
  h.total = labels.labels.size();
  return h;
}

ProbVector concatHistograms(std::span<const Histogram> parts) {
  std::vector<double> joined;
  std::size_t nonEmpty = 0;
  for (const Histogram& h : parts) {
    if (h.total == 0) {
      joined.insert(joined.end(), h.counts.size(), 0.0);
      continue;
    }
    ++nonEmpty;
    const auto p = h.normalized();
    joined.insert(joined.end(), p.values().begin(), p.values().end());
  }
  if (nonEmpty == 0) throw ArgumentError("cannot concatenate empty histograms");
  return ProbVector::fromWeights(joined);
}

ProbVector concatHistogram(const Histogram& first, const Histogram& second) {
  const Histogram parts[] = {first, second};
  return concatHistograms(parts);
}

DominantFeature dominantPatterns(const Histogram& h, double coverage) {
  if (h.total == 0) throw ArgumentError("dominant patterns of an empty histogram");
  if (!(coverage > 0.0 && coverage <= 1.0)) {
    throw ArgumentError("coverage must lie in (0, 1]");
  }
  std::vector<std::uint64_t> sorted(h.counts);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const double total = static_cast<double>(h.total);
  const double needed = coverage * total - 1e-9 * total;

  DominantFeature out;
  std::uint64_t cumulative = 0;
  for (std::uint64_t c : sorted) {
    if (c == 0) break;
    cumulative += c;
    out.frequencies.push_back(static_cast<double>(c) / total);
    if (static_cast<double>(cumulative) >= needed) break;
  }
  out.coverage = static_cast<double>(cumulative) / total;
  return out;
}

std::vector<double> padWithZeros(std::span<const double> v, std::size_t length) {
  std::vector<double> out(v.begin(), v.end());
  if (out.size() < length) out.resize(length, 0.0);
  return out;
}

}  // namespace lbptex
