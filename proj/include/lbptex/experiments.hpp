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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lbptex/classify.hpp"
#include "lbptex/dataset.hpp"
#include "lbptex/descriptors.hpp"
#include "lbptex/histograms.hpp"
#include "lbptex/metrics.hpp"

namespace lbptex {

/// How contrast information is combined with the LBP labels.
enum class CiMode { None, Joint, Concat };

std::string_view ciModeName(CiMode mode) noexcept;
CiMode parseCiMode(std::string_view name);

struct ExperimentConfig {
  std::vector<Variant> variants{Variant::Classic};
  std::vector<Metric> metrics{Metric::Ordinal, Metric::KlDivergence};
  NeighborhoodSpec spec;  // P=8, R=1, bilinear
  int tolerance = 1;
  int cenThreshold = 3;
  CiMode ciMode = CiMode::None;
  int ciBins = 8;
  double dominantCoverage = 0.8;
  // Applied to test images only; 0 leaves them untouched.
  double noiseVariance = 0.0;
  std::uint64_t seed = 0;
  // Apply rorMin to ni codes.
  bool niRotationInvariant = true;
  unsigned threads = 0;  // 0 = hardware concurrency

  void validate() const;
  VariantParams paramsFor(Variant v) const;
};

/// Turns images into comparable feature vectors for one variant. A contrast
/// quantizer is fitted on the reference images when CI is enabled.
class FeatureExtractor {
 public:
  FeatureExtractor(const ExperimentConfig& config, Variant variant);

  /// Fits the CI quantizer on the reference images (no-op without CI).
  void fit(const std::vector<const GrayImage*>& references);

  /// Histograms before normalization and concatenation.
  std::vector<Histogram> histograms(const GrayImage& img) const;
  ProbVector feature(const GrayImage& img) const;

  const VariantParams& params() const noexcept { return params_; }
  const std::optional<CIQuantizer>& quantizer() const noexcept { return quantizer_; }

 private:
  std::vector<LabelMap> componentMaps(const GrayImage& img) const;

  ExperimentConfig config_;
  VariantParams params_;
  std::optional<CIQuantizer> quantizer_;
};

struct ClassifiedImage {
  std::string name;
  std::string textureId;
  std::string condition;
  std::string predicted;
  std::vector<double> distances;  // one per reference
};

struct ExperimentReport {
  std::string experiment;
  Variant variant = Variant::Classic;
  Metric metric = Metric::Ordinal;
  ExperimentConfig config;
  ConfusionMatrix confusion{{}};
  double accuracy = 0.0;
  std::vector<ClassifiedImage> classified;
  // Mean distance from each reference to its own test images.
  std::vector<std::pair<std::string, double>> selfDistances;
};

/// Classifies every test image of `dataset` against its references for each
/// (variant, metric) of `config`. Throws ManifestValidationError for a test
/// texture without a reference.
std::vector<ExperimentReport> runRotationExperiment(const Dataset& dataset,
                                                    const ExperimentConfig& config);

struct RadiusRow {
  Variant variant;
  Metric metric;
  double radius;
  double accuracy;
  ConfusionMatrix confusion;
};

/// Accuracy per (variant, metric, R) with the config's P.
std::vector<RadiusRow> runRadiusSweep(const Dataset& dataset,
                                      const ExperimentConfig& config,
                                      const std::vector<double>& radii = {1, 2, 3});

struct NoiseRow {
  Variant variant;
  Metric metric;
  double cleanAccuracy;
  double noisyAccuracy;
  ConfusionMatrix cleanConfusion;
  ConfusionMatrix noisyConfusion;
};

/// Clean accuracy next to accuracy with Gaussian noise of `variance` on the
/// test images; references stay clean.
std::vector<NoiseRow> runNoiseExperiment(const Dataset& dataset,
                                         const ExperimentConfig& config,
                                         double variance, std::uint64_t seed);

struct IlluminationRow {
  Variant variant;
  Metric metric;
  CiMode ciMode;
  double accuracy;
  ConfusionMatrix confusion;
};

std::vector<IlluminationRow> runIlluminationExperiment(
    const Dataset& dataset, const ExperimentConfig& config,
    const std::vector<CiMode>& modes);

}  // namespace lbptex
