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

#include "lbptex/report.hpp"

#include <sstream>

namespace lbptex {

Json histogramToJson(const Histogram& h) {
  Json j;
  j["variant"] = h.variant;
  j["bins"] = h.bins();
  j["counts"] = h.counts;
  j["total"] = h.total;
  return j;
}

std::string histogramToCsv(const Histogram& h) {
  std::ostringstream out;
  out << "bin,count\n";
  for (std::size_t i = 0; i < h.counts.size(); ++i) {
    out << i << ',' << h.counts[i] << '\n';
  }
  return out.str();
}

Json configToJson(const ExperimentConfig& config) {
  Json j;
  j["P"] = config.spec.points;
  j["R"] = config.spec.radius;
  j["mode"] = std::string(samplingModeName(config.spec.mode));
  j["t"] = config.tolerance;
  j["c"] = config.cenThreshold;
  j["ci_mode"] = std::string(ciModeName(config.ciMode));
  j["ci_bins"] = config.ciBins;
  j["dominant_coverage"] = config.dominantCoverage;
  j["noise_variance"] = config.noiseVariance;
  j["seed"] = config.seed;
  j["ni_rotation_invariant"] = config.niRotationInvariant;
  return j;
}

Json confusionToJson(const ConfusionMatrix& m) {
  Json j;
  j["classes"] = m.classes();
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.classCount(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.classCount(); ++k) row.push_back(m.at(i, k));
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  j["correct"] = m.trace();
  j["total"] = m.total();
  return j;
}

Json reportToJson(const ExperimentReport& report) {
  Json j;
  j["experiment"] = report.experiment;
  j["variant"] = std::string(variantName(report.variant));
  j["metric"] = std::string(metricName(report.metric));
  j["parameters"] = configToJson(report.config);
  j["confusion"] = confusionToJson(report.confusion);
  j["accuracy"] = report.accuracy;
  j["accuracy_text"] = formatAccuracy(report.accuracy);
  Json classified = Json::array();
  for (const auto& c : report.classified) {
    Json row;
    row["image"] = c.name;
    row["texture_id"] = c.textureId;
    row["condition"] = c.condition;
    row["predicted"] = c.predicted;
    row["distances"] = c.distances;
    classified.push_back(std::move(row));
  }
  j["classified"] = std::move(classified);
  Json self = Json::object();
  for (const auto& [id, d] : report.selfDistances) self[id] = d;
  j["self_distances"] = std::move(self);
  return j;
}

Json reportsToJson(const std::vector<ExperimentReport>& reports) {
  Json j;
  j["experiment"] = reports.empty() ? "rotation" : reports.front().experiment;
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(reportToJson(r));
  j["reports"] = std::move(arr);
  return j;
}

Json radiusRowsToJson(const std::vector<RadiusRow>& rows,
                      const ExperimentConfig& config) {
  Json j;
  j["experiment"] = "radius";
  j["parameters"] = configToJson(config);
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["variant"] = std::string(variantName(r.variant));
    row["metric"] = std::string(metricName(r.metric));
    row["R"] = r.radius;
    row["accuracy"] = r.accuracy;
    row["confusion"] = confusionToJson(r.confusion);
    arr.push_back(std::move(row));
  }
  j["rows"] = std::move(arr);
  return j;
}

Json noiseRowsToJson(const std::vector<NoiseRow>& rows,
                     const ExperimentConfig& config, double variance,
                     std::uint64_t seed) {
  Json j;
  j["experiment"] = "noise";
  j["parameters"] = configToJson(config);
  j["variance"] = variance;
  j["seed"] = seed;
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["variant"] = std::string(variantName(r.variant));
    row["metric"] = std::string(metricName(r.metric));
    row["clean_accuracy"] = r.cleanAccuracy;
    row["noisy_accuracy"] = r.noisyAccuracy;
    row["clean_confusion"] = confusionToJson(r.cleanConfusion);
    row["noisy_confusion"] = confusionToJson(r.noisyConfusion);
    arr.push_back(std::move(row));
  }
  j["rows"] = std::move(arr);
  return j;
}

Json illuminationRowsToJson(const std::vector<IlluminationRow>& rows,
                            const ExperimentConfig& config) {
  Json j;
  j["experiment"] = "illumination";
  j["parameters"] = configToJson(config);
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["variant"] = std::string(variantName(r.variant));
    row["metric"] = std::string(metricName(r.metric));
    row["ci_mode"] = std::string(ciModeName(r.ciMode));
    row["accuracy"] = r.accuracy;
    row["confusion"] = confusionToJson(r.confusion);
    arr.push_back(std::move(row));
  }
  j["rows"] = std::move(arr);
  return j;
}

std::string accuracyCsv(const std::vector<ExperimentReport>& reports) {
  std::ostringstream out;
  out << "variant,metric,correct,total,accuracy\n";
  for (const auto& r : reports) {
    out << variantName(r.variant) << ',' << metricName(r.metric) << ','
        << r.confusion.trace() << ',' << r.confusion.total() << ','
        << formatAccuracy(r.accuracy) << '\n';
  }
  return out.str();
}

std::string accuracyCsv(const std::vector<RadiusRow>& rows) {
  std::ostringstream out;
  out << "variant,metric,R,accuracy\n";
  for (const auto& r : rows) {
    out << variantName(r.variant) << ',' << metricName(r.metric) << ',' << r.radius
        << ',' << formatAccuracy(r.accuracy) << '\n';
  }
  return out.str();
}

std::string accuracyCsv(const std::vector<NoiseRow>& rows) {
  std::ostringstream out;
  out << "variant,metric,clean_accuracy,noisy_accuracy\n";
  for (const auto& r : rows) {
    out << variantName(r.variant) << ',' << metricName(r.metric) << ','
        << formatAccuracy(r.cleanAccuracy) << ',' << formatAccuracy(r.noisyAccuracy)
        << '\n';
  }
  return out.str();
}

std::string accuracyCsv(const std::vector<IlluminationRow>& rows) {
  std::ostringstream out;
  out << "variant,metric,ci_mode,accuracy\n";
  for (const auto& r : rows) {
    out << variantName(r.variant) << ',' << metricName(r.metric) << ','
        << ciModeName(r.ciMode) << ',' << formatAccuracy(r.accuracy) << '\n';
  }
  return out.str();
}

}  // namespace lbptex
