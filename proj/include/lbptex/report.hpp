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

#include <string>
#include <vector>

#include "json.hpp"
#include "lbptex/experiments.hpp"
#include "lbptex/histograms.hpp"

namespace lbptex {

using Json = nlohmann::ordered_json;

/// {variant, bins, counts, total}
Json histogramToJson(const Histogram& h);
/// One "bin,count" row per bin after a header.
std::string histogramToCsv(const Histogram& h);

Json configToJson(const ExperimentConfig& config);
Json confusionToJson(const ConfusionMatrix& m);
Json reportToJson(const ExperimentReport& report);
Json reportsToJson(const std::vector<ExperimentReport>& reports);

Json radiusRowsToJson(const std::vector<RadiusRow>& rows,
                      const ExperimentConfig& config);
Json noiseRowsToJson(const std::vector<NoiseRow>& rows,
                     const ExperimentConfig& config, double variance,
                     std::uint64_t seed);
Json illuminationRowsToJson(const std::vector<IlluminationRow>& rows,
                            const ExperimentConfig& config);

// Accuracy tables; accuracies carry two decimals.
std::string accuracyCsv(const std::vector<ExperimentReport>& reports);
std::string accuracyCsv(const std::vector<RadiusRow>& rows);
std::string accuracyCsv(const std::vector<NoiseRow>& rows);
std::string accuracyCsv(const std::vector<IlluminationRow>& rows);

}  // namespace lbptex
