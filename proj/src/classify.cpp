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

#include "lbptex/classify.hpp"

#include <cstdio>
#include <set>
#include <sstream>

#include "lbptex/errors.hpp"

namespace lbptex {

ReferenceSet::ReferenceSet(std::vector<ReferenceEntry> entries, Metric metric)
    : entries_(std::move(entries)), metric_(metric) {
  if (entries_.empty()) throw ArgumentError("reference set is empty");
  std::set<std::string> seen;
  for (const auto& e : entries_) {
    if (!seen.insert(e.textureId).second) {
      throw ArgumentError("duplicate reference texture '" + e.textureId + "'");
    }
    if (e.feature.size() != entries_.front().feature.size()) {
      throw ArgumentError("reference features differ in length");
    }
  }
}

std::size_t ReferenceSet::featureLength() const noexcept {
  return entries_.empty() ? 0 : entries_.front().feature.size();
}

std::size_t ReferenceSet::indexOf(const std::string& textureId) const noexcept {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].textureId == textureId) return i;
  }
  return entries_.size();
}

Match nearestReference(const ProbVector& test, const ReferenceSet& refs) {
  const Metric metric = refs.metric();
  return nearestReference(test, refs,
                          [metric](const ProbVector& r, const ProbVector& t) {
                            return distance(metric, r, t);
                          });
}

Match nearestReference(const ProbVector& test, const ReferenceSet& refs,
                       const DistanceFn& distanceFn) {
  if (refs.size() == 0) throw ArgumentError("reference set is empty");
  if (test.size() != refs.featureLength()) {
    throw ArgumentError("test feature length " + std::to_string(test.size()) +
                        " does not match references (" +
                        std::to_string(refs.featureLength()) + ")");
  }
  Match m;
  m.distances.reserve(refs.size());
  for (std::size_t i = 0; i < refs.size(); ++i) {
    const double d = distanceFn(refs.entries()[i].feature, test);
    m.distances.push_back(d);
    if (i == 0 || d < m.distance) {
      m.index = i;
      m.distance = d;
    }
  }
  m.textureId = refs.entries()[m.index].textureId;
  return m;
}

ConfusionMatrix::ConfusionMatrix(std::vector<std::string> classes)
    : classes_(std::move(classes)), cells_(classes_.size() * classes_.size(), 0) {}

void ConfusionMatrix::add(std::size_t actual, std::size_t predicted,
                          std::uint64_t n) {
  if (actual >= classCount() || predicted >= classCount()) {
    throw ArgumentError("class id out of range for a " +
                        std::to_string(classCount()) + "-class matrix");
  }
  cells_[actual * classCount() + predicted] += n;
}

std::uint64_t ConfusionMatrix::at(std::size_t actual, std::size_t predicted) const {
  if (actual >= classCount() || predicted >= classCount()) {
    throw ArgumentError("class id out of range");
  }
  return cells_[actual * classCount() + predicted];
}

std::uint64_t ConfusionMatrix::total() const noexcept {
  std::uint64_t s = 0;
  for (auto c : cells_) s += c;
  return s;
}

std::uint64_t ConfusionMatrix::trace() const noexcept {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < classCount(); ++i) s += cells_[i * classCount() + i];
  return s;
}

std::uint64_t ConfusionMatrix::rowSum(std::size_t actual) const {
  std::uint64_t s = 0;
  for (std::size_t j = 0; j < classCount(); ++j) s += at(actual, j);
  return s;
}

bool ConfusionMatrix::isDiagonal() const noexcept {
  return trace() == total();
}

ConfusionMatrix confusionMatrix(
    std::span<const std::pair<std::size_t, std::size_t>> predictions,
    std::size_t k) {
  std::vector<std::string> names;
  names.reserve(k);
  for (std::size_t i = 0; i < k; ++i) names.push_back(std::to_string(i));
  ConfusionMatrix m(std::move(names));
  for (const auto& [actual, predicted] : predictions) m.add(actual, predicted);
  return m;
}

double accuracyRate(const ConfusionMatrix& m) {
  const std::uint64_t total = m.total();
  if (total == 0) throw ArgumentError("accuracy of an empty confusion matrix");
  return 100.0 * static_cast<double>(m.trace()) / static_cast<double>(total);
}

std::string formatAccuracy(double percent) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", percent);
  return buf;
}

std::string confusionToCsv(const ConfusionMatrix& m) {
  std::ostringstream out;
  out << "actual\\predicted";
  for (const auto& name : m.classes()) out << ',' << name;
  out << '\n';
  for (std::size_t i = 0; i < m.classCount(); ++i) {
    out << m.classes()[i];
    for (std::size_t j = 0; j < m.classCount(); ++j) out << ',' << m.at(i, j);
    out << '\n';
  }
  return out.str();
}

}  // namespace lbptex
