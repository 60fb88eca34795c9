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

#include "lbptex/experiments.hpp"

#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "lbptex/errors.hpp"

namespace lbptex {

std::string_view ciModeName(CiMode mode) noexcept {
  switch (mode) {
    case CiMode::None:
      return "none";
    case CiMode::Joint:
      return "joint";
    case CiMode::Concat:
      return "concat";
  }
  return "none";
}

CiMode parseCiMode(std::string_view name) {
  if (name == "none") return CiMode::None;
  if (name == "joint") return CiMode::Joint;
  if (name == "concat") return CiMode::Concat;
  throw ArgumentError("unknown ci mode '" + std::string(name) + "'");
}

void ExperimentConfig::validate() const {
  spec.validate();
  if (variants.empty()) throw ArgumentError("no variants selected");
  if (metrics.empty()) throw ArgumentError("no metrics selected");
  if (tolerance < 0 || cenThreshold < 0) {
    throw ArgumentError("t and c must be non-negative");
  }
  if (ciBins < 1) throw ArgumentError("ci bins must be >= 1");
  if (!(dominantCoverage > 0.0 && dominantCoverage <= 1.0)) {
    throw ArgumentError("dominant coverage must lie in (0, 1]");
  }
  if (!(noiseVariance >= 0.0)) throw ArgumentError("noise variance must be >= 0");
}

VariantParams ExperimentConfig::paramsFor(Variant v) const {
  VariantParams p;
  p.variant = v;
  p.spec = spec;
  p.tolerance = tolerance;
  p.cenThreshold = cenThreshold;
  p.niRotationInvariant = niRotationInvariant;
  return p;
}

namespace {

// Runs fn(i) for i in [0, n) on up to `threads` workers. Results must be
// written to per-index slots so output order never depends on scheduling.
template <typename Fn>
void parallelFor(std::size_t n, unsigned threads, Fn&& fn) {
  unsigned workers = threads == 0 ? std::thread::hardware_concurrency() : threads;
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(n)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failureMutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failureMutex);
          if (!failure) failure = std::current_exception();
          next = n;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

LabelMap combineWithCenter(const LabelMap& codes, const LabelMap& center,
                           int points, const char* name) {
  LabelMap out;
  out.width = codes.width;
  out.height = codes.height;
  out.labelSpace = 2U * static_cast<std::uint32_t>(points + 2);
  out.variant = name;
  out.labels.resize(codes.labels.size());
  for (std::size_t i = 0; i < codes.labels.size(); ++i) {
    out.labels[i] = uniformLabel({codes.labels[i], points}) * 2U + center.labels[i];
  }
  return out;
}

void checkDataset(const Dataset& dataset) {
  std::map<std::string, int> refs;
  for (const auto* s : dataset.references()) {
    if (++refs[s->textureId] > 1) {
      throw ManifestValidationError("texture '" + s->textureId +
                                    "' has more than one reference image");
    }
  }
  if (refs.empty()) throw ManifestValidationError("dataset has no reference images");
  for (const auto* s : dataset.tests()) {
    if (refs.count(s->textureId) == 0) {
      throw ManifestValidationError("test image '" + s->name + "' has no reference for '" +
                                    s->textureId + "'");
    }
  }
}

}  // namespace

FeatureExtractor::FeatureExtractor(const ExperimentConfig& config, Variant variant)
    : config_(config), params_(config.paramsFor(variant)) {
  params_.validate();
}

void FeatureExtractor::fit(const std::vector<const GrayImage*>& references) {
  quantizer_.reset();
  if (config_.ciMode == CiMode::None) return;
  std::vector<double> values;
  for (const GrayImage* img : references) {
    const ContrastMap cm = computeContrastMap(*img, params_.spec);
    values.insert(values.end(), cm.values.begin(), cm.values.end());
  }
  quantizer_ = fitCiQuantizer(values, config_.ciBins);
}

std::vector<LabelMap> FeatureExtractor::componentMaps(const GrayImage& img) const {
  std::vector<LabelMap> maps = computeLabelMaps(img, params_);
  if (params_.variant != Variant::Clbp) return maps;
  const int P = params_.spec.points;
  std::vector<LabelMap> out;
  out.push_back(combineWithCenter(maps[0], maps[2], P, "clbp.s_c"));
  out.push_back(combineWithCenter(maps[1], maps[2], P, "clbp.m_c"));
  return out;
}

std::vector<Histogram> FeatureExtractor::histograms(const GrayImage& img) const {
  const std::vector<LabelMap> maps = componentMaps(img);
  std::vector<Histogram> out;
  if (config_.ciMode == CiMode::None) {
    for (const auto& m : maps) out.push_back(buildHistogram(m));
    return out;
  }
  if (!quantizer_) throw ArgumentError("contrast quantizer has not been fitted");
  const LabelMap ci =
      quantizeContrastMap(computeContrastMap(img, params_.spec), *quantizer_);
  for (const auto& m : maps) {
    out.push_back(config_.ciMode == CiMode::Joint ? jointHistogram(m, ci)
                                                  : buildHistogram(m));
  }
  if (config_.ciMode == CiMode::Concat) out.push_back(buildHistogram(ci));
  return out;
}

ProbVector FeatureExtractor::feature(const GrayImage& img) const {
  std::vector<Histogram> parts = histograms(img);
  if (params_.variant != Variant::Dom) return concatHistograms(parts);

  // Dominant patterns replace the label histogram; padding to the full label
  // space keeps features of different images comparable.
  std::vector<double> joined;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<double> p;
    if (i == 0) {
      const auto dom = dominantPatterns(parts[0], config_.dominantCoverage);
      p = padWithZeros(ProbVector::fromWeights(dom.frequencies).values(),
                       parts[0].bins());
    } else {
      const auto n = parts[i].normalized();
      p.assign(n.values().begin(), n.values().end());
    }
    joined.insert(joined.end(), p.begin(), p.end());
  }
  return ProbVector::fromWeights(joined);
}

std::vector<ExperimentReport> runRotationExperiment(const Dataset& dataset,
                                                    const ExperimentConfig& config) {
  config.validate();
  checkDataset(dataset);
  const auto refs = dataset.references();
  const auto tests = dataset.tests();

  std::vector<GrayImage> noisy;
  if (config.noiseVariance > 0.0) {
    noisy.resize(tests.size());
    parallelFor(tests.size(), config.threads, [&](std::size_t i) {
      noisy[i] = addGaussianNoise(tests[i]->image, config.noiseVariance, config.seed + i);
    });
  }
  const auto testImage = [&](std::size_t i) -> const GrayImage& {
    return noisy.empty() ? tests[i]->image : noisy[i];
  };

  std::vector<std::string> classNames;
  std::vector<const GrayImage*> refImages;
  for (const auto* r : refs) {
    classNames.push_back(r->textureId);
    refImages.push_back(&r->image);
  }

  std::vector<ExperimentReport> reports;
  for (Variant variant : config.variants) {
    FeatureExtractor extractor(config, variant);
    extractor.fit(refImages);

    std::vector<ProbVector> refFeatures(refs.size());
    parallelFor(refs.size(), config.threads, [&](std::size_t i) {
      refFeatures[i] = extractor.feature(refs[i]->image);
    });
    std::vector<ProbVector> testFeatures(tests.size());
    parallelFor(tests.size(), config.threads, [&](std::size_t i) {
      testFeatures[i] = extractor.feature(testImage(i));
    });

    for (Metric metric : config.metrics) {
      std::vector<ReferenceEntry> entries;
      for (std::size_t i = 0; i < refs.size(); ++i) {
        entries.push_back({refs[i]->textureId, refFeatures[i]});
      }
      const ReferenceSet refSet(std::move(entries), metric);

      ExperimentReport report;
      report.experiment = "rotation";
      report.variant = variant;
      report.metric = metric;
      report.config = config;
      report.confusion = ConfusionMatrix(classNames);
      std::vector<double> selfSum(refs.size(), 0.0);
      std::vector<std::size_t> selfCount(refs.size(), 0);

      for (std::size_t i = 0; i < tests.size(); ++i) {
        const Match m = nearestReference(testFeatures[i], refSet);
        const std::size_t actual = refSet.indexOf(tests[i]->textureId);
        report.confusion.add(actual, m.index);
        selfSum[actual] += m.distances[actual];
        ++selfCount[actual];
        report.classified.push_back({tests[i]->name, tests[i]->textureId,
                                     std::string(conditionName(tests[i]->condition)),
                                     m.textureId, m.distances});
      }
      for (std::size_t r = 0; r < refs.size(); ++r) {
        if (selfCount[r] > 0) {
          report.selfDistances.emplace_back(classNames[r],
                                            selfSum[r] / static_cast<double>(selfCount[r]));
        }
      }
      report.accuracy = tests.empty() ? 0.0 : accuracyRate(report.confusion);
      reports.push_back(std::move(report));
    }
  }
  return reports;
}

std::vector<RadiusRow> runRadiusSweep(const Dataset& dataset,
                                      const ExperimentConfig& config,
                                      const std::vector<double>& radii) {
  if (radii.empty()) throw ArgumentError("radius list is empty");
  std::vector<RadiusRow> rows;
  for (double r : radii) {
    ExperimentConfig c = config;
    c.spec.radius = r;
    for (auto& rep : runRotationExperiment(dataset, c)) {
      rows.push_back({rep.variant, rep.metric, r, rep.accuracy, std::move(rep.confusion)});
    }
  }
  return rows;
}

std::vector<NoiseRow> runNoiseExperiment(const Dataset& dataset,
                                         const ExperimentConfig& config,
                                         double variance, std::uint64_t seed) {
  if (!(variance >= 0.0)) throw ArgumentError("noise variance must be >= 0");
  ExperimentConfig clean = config;
  clean.noiseVariance = 0.0;
  ExperimentConfig noisy = config;
  noisy.noiseVariance = variance;
  noisy.seed = seed;
  auto cleanReports = runRotationExperiment(dataset, clean);
  auto noisyReports = runRotationExperiment(dataset, noisy);
  std::vector<NoiseRow> rows;
  for (std::size_t i = 0; i < cleanReports.size(); ++i) {
    rows.push_back({cleanReports[i].variant, cleanReports[i].metric,
                    cleanReports[i].accuracy, noisyReports[i].accuracy,
                    std::move(cleanReports[i].confusion),
                    std::move(noisyReports[i].confusion)});
  }
  return rows;
}

std::vector<IlluminationRow> runIlluminationExperiment(
    const Dataset& dataset, const ExperimentConfig& config,
    const std::vector<CiMode>& modes) {
  if (modes.empty()) throw ArgumentError("no ci modes selected");
  std::vector<IlluminationRow> rows;
  for (CiMode mode : modes) {
    ExperimentConfig c = config;
    c.ciMode = mode;
    for (auto& rep : runRotationExperiment(dataset, c)) {
      rows.push_back({rep.variant, rep.metric, mode, rep.accuracy, std::move(rep.confusion)});
    }
  }
  return rows;
}

}  // namespace lbptex
