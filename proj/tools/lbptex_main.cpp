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

// Command-line front end: describe images, classify manifests and run the
// rotation / radius / noise / illumination experiments.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lbptex/dataset.hpp"
#include "lbptex/errors.hpp"
#include "lbptex/experiments.hpp"
#include "lbptex/image_io.hpp"
#include "lbptex/manifest.hpp"
#include "lbptex/report.hpp"

namespace {

using namespace lbptex;

struct NeighborhoodOptions {
  int points = 8;
  double radius = 1.0;
  std::string mode = "bilinear";
  int tolerance = 1;
  int cenThreshold = 3;
};

void addNeighborhoodOptions(CLI::App* cmd, NeighborhoodOptions& opts) {
  cmd->add_option("--P", opts.points, "Number of sampling points")->capture_default_str();
  cmd->add_option("--R", opts.radius, "Neighborhood radius in pixels")->capture_default_str();
  cmd->add_option("--mode", opts.mode, "Sampling mode: bilinear or nearest")
      ->capture_default_str();
  cmd->add_option("--t", opts.tolerance, "ltp tolerance interval")->capture_default_str();
  cmd->add_option("--c", opts.cenThreshold, "cen fixed threshold")->capture_default_str();
}

std::vector<std::string> splitList(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void writeText(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path + "'");
  out << text;
}

std::string dumpJson(const Json& j) { return j.dump(2) + "\n"; }

struct ExperimentOptions {
  NeighborhoodOptions nb;
  std::string manifest;
  bool synthetic = false;
  std::string variants = "classic,min,min_interp,uni,num,ni,med";
  std::string metrics = "od,kl";
  std::string ci = "none";
  int ciBins = 8;
  double variance = 0.06;
  std::uint64_t seed = 0;
  std::string radii = "1,2,3";
  bool niRaw = false;
  unsigned threads = 0;
  std::string out;
  std::string csv;
};

ExperimentConfig makeConfig(const ExperimentOptions& o) {
  ExperimentConfig c;
  c.variants.clear();
  for (const auto& v : splitList(o.variants)) c.variants.push_back(parseVariant(v));
  c.metrics.clear();
  for (const auto& m : splitList(o.metrics)) c.metrics.push_back(parseMetric(m));
  c.spec = {o.nb.points, o.nb.radius, parseSamplingMode(o.nb.mode)};
  c.tolerance = o.nb.tolerance;
  c.cenThreshold = o.nb.cenThreshold;
  c.ciBins = o.ciBins;
  c.seed = o.seed;
  c.niRotationInvariant = !o.niRaw;
  c.threads = o.threads;
  const auto modes = splitList(o.ci);
  c.ciMode = modes.empty() ? CiMode::None : parseCiMode(modes.front());
  c.validate();
  return c;
}

Dataset loadExperimentData(const ExperimentOptions& o, bool illumination) {
  if (o.synthetic) {
    if (illumination) {
      IlluminationFixtureOptions opts;
      opts.textures = illuminationTextures(o.seed);
      opts.gains = {0.8, 1.2};
      return makeIlluminationFixtures(opts);
    }
    RotationFixtureOptions opts;
    opts.textures = standardTextures(o.seed);
    return makeRotationFixtures(opts);
  }
  if (o.manifest.empty()) {
    throw ArgumentError("either --manifest or --synthetic is required");
  }
  return loadDataset(ingestManifest(o.manifest));
}

void addExperimentOptions(CLI::App* cmd, ExperimentOptions& o) {
  addNeighborhoodOptions(cmd, o.nb);
  cmd->add_option("--manifest", o.manifest, "Dataset manifest (JSON)");
  cmd->add_flag("--synthetic", o.synthetic, "Use built-in synthetic fixtures");
  cmd->add_option("--variants", o.variants, "Comma-separated variant list")
      ->capture_default_str();
  cmd->add_option("--metrics", o.metrics, "Comma-separated metrics (od, kl)")
      ->capture_default_str();
  cmd->add_option("--ci", o.ci, "Contrast mode(s): none, joint, concat")
      ->capture_default_str();
  cmd->add_option("--ci-bins", o.ciBins, "Equal-population contrast bins")
      ->capture_default_str();
  cmd->add_option("--seed", o.seed, "Seed for noise and synthetic fixtures")
      ->capture_default_str();
  cmd->add_flag("--ni-raw", o.niRaw, "Do not canonicalize ni codes with ROR-min");
  cmd->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  cmd->add_option("--out", o.out, "JSON report path (stdout when omitted)");
  cmd->add_option("--csv", o.csv, "Accuracy table CSV path");
}

int runDescribe(const NeighborhoodOptions& nb, const std::string& variant,
                const std::string& in, const std::string& out,
                const std::string& csv, bool niRotationInvariant) {
  VariantParams params;
  params.variant = parseVariant(variant);
  params.spec = {nb.points, nb.radius, parseSamplingMode(nb.mode)};
  params.tolerance = nb.tolerance;
  params.cenThreshold = nb.cenThreshold;
  params.niRotationInvariant = niRotationInvariant;
  params.validate();

  const GrayImage img = readImage(in);
  ExperimentConfig config;
  config.spec = params.spec;
  config.tolerance = params.tolerance;
  config.cenThreshold = params.cenThreshold;
  config.niRotationInvariant = niRotationInvariant;
  const FeatureExtractor extractor(config, params.variant);

  // Multi-part variants (ltp, clbp) report the concatenated counts.
  Histogram merged;
  merged.variant = std::string(variantName(params.variant));
  for (const auto& h : extractor.histograms(img)) {
    merged.counts.insert(merged.counts.end(), h.counts.begin(), h.counts.end());
    merged.total += h.total;
  }
  Json j = histogramToJson(merged);
  if (params.variant == Variant::Dom) {
    j["dominant"] = dominantPatterns(merged).frequencies;
  }
  writeText(out, dumpJson(j));
  if (!csv.empty()) writeText(csv, histogramToCsv(merged));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local binary pattern texture descriptors and experiments"};
  app.require_subcommand(1);

  NeighborhoodOptions describeNb;
  std::string describeVariant = "circ";
  std::string describeIn;
  std::string describeOut;
  std::string describeCsv;
  bool describeNiRi = false;
  auto* describe = app.add_subcommand("describe", "Compute the label histogram of one image");
  addNeighborhoodOptions(describe, describeNb);
  describe->add_option("--variant", describeVariant, "LBP variant")->capture_default_str();
  describe->add_option("--in", describeIn, "Input image (PGM/PPM/PNG)")->required();
  describe->add_option("--out", describeOut, "Histogram JSON path (stdout when omitted)");
  describe->add_option("--csv", describeCsv, "Histogram CSV path");
  describe->add_flag("--ni-ri", describeNiRi, "Canonicalize ni codes with ROR-min");

  ExperimentOptions classifyOpts;
  classifyOpts.variants = "num";
  classifyOpts.metrics = "od";
  std::string confusionCsv;
  auto* classify = app.add_subcommand("classify", "Nearest-reference classification of a manifest");
  addNeighborhoodOptions(classify, classifyOpts.nb);
  classify->add_option("--manifest", classifyOpts.manifest, "Dataset manifest (JSON)")->required();
  classify->add_option("--variant", classifyOpts.variants, "LBP variant")->capture_default_str();
  classify->add_option("--metric", classifyOpts.metrics, "od or kl")->capture_default_str();
  classify->add_option("--ci", classifyOpts.ci, "Contrast mode: none, joint, concat")
      ->capture_default_str();
  classify->add_option("--ci-bins", classifyOpts.ciBins, "Equal-population contrast bins")
      ->capture_default_str();
  classify->add_flag("--ni-raw", classifyOpts.niRaw, "Do not canonicalize ni codes");
  classify->add_option("--threads", classifyOpts.threads, "Worker threads (0 = all cores)");
  classify->add_option("--out", classifyOpts.out, "JSON report path (stdout when omitted)");
  classify->add_option("--csv", confusionCsv, "Confusion matrix CSV path");

  ExperimentOptions expOpts;
  std::string experimentKind;
  auto* experiment = app.add_subcommand("experiment", "Run an evaluation protocol");
  experiment->add_option("kind", experimentKind, "rotation, radius, noise or illumination")
      ->required()
      ->check(CLI::IsMember({"rotation", "radius", "noise", "illumination"}));
  addExperimentOptions(experiment, expOpts);
  experiment->add_option("--variance", expOpts.variance, "Gaussian noise variance")
      ->capture_default_str();
  experiment->add_option("--radii", expOpts.radii, "Comma-separated radii for the sweep")
      ->capture_default_str();

  std::string fixturesDir;
  std::string fixturesKind = "rotation";
  std::uint64_t fixturesSeed = 0;
  int fixturesSize = 64;
  auto* fixtures = app.add_subcommand("fixtures", "Write a synthetic dataset and manifest");
  fixtures->add_option("--out", fixturesDir, "Output directory")->required();
  fixtures->add_option("--kind", fixturesKind, "rotation or illumination")
      ->check(CLI::IsMember({"rotation", "illumination"}))
      ->capture_default_str();
  fixtures->add_option("--seed", fixturesSeed, "Texture seed")->capture_default_str();
  fixtures->add_option("--size", fixturesSize, "Image side in pixels")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (describe->parsed()) {
      return runDescribe(describeNb, describeVariant, describeIn, describeOut, describeCsv,
                         describeNiRi);
    }

    if (classify->parsed()) {
      const ExperimentConfig config = makeConfig(classifyOpts);
      const Dataset ds = loadDataset(ingestManifest(classifyOpts.manifest));
      auto reports = runRotationExperiment(ds, config);
      reports.front().experiment = "classify";
      writeText(classifyOpts.out, dumpJson(reportToJson(reports.front())));
      if (!confusionCsv.empty()) writeText(confusionCsv, confusionToCsv(reports.front().confusion));
      return 0;
    }

    if (experiment->parsed()) {
      const ExperimentConfig config = makeConfig(expOpts);
      const Dataset ds = loadExperimentData(expOpts, experimentKind == "illumination");
      Json j;
      std::string table;
      if (experimentKind == "rotation") {
        const auto reports = runRotationExperiment(ds, config);
        j = reportsToJson(reports);
        table = accuracyCsv(reports);
      } else if (experimentKind == "radius") {
        std::vector<double> radii;
        for (const auto& r : splitList(expOpts.radii)) radii.push_back(std::stod(r));
        const auto rows = runRadiusSweep(ds, config, radii);
        j = radiusRowsToJson(rows, config);
        table = accuracyCsv(rows);
      } else if (experimentKind == "noise") {
        const auto rows = runNoiseExperiment(ds, config, expOpts.variance, expOpts.seed);
        j = noiseRowsToJson(rows, config, expOpts.variance, expOpts.seed);
        table = accuracyCsv(rows);
      } else {
        std::vector<CiMode> modes;
        for (const auto& m : splitList(expOpts.ci)) modes.push_back(parseCiMode(m));
        const auto rows = runIlluminationExperiment(ds, config, modes);
        j = illuminationRowsToJson(rows, config);
        table = accuracyCsv(rows);
      }
      writeText(expOpts.out, dumpJson(j));
      if (!expOpts.csv.empty()) writeText(expOpts.csv, table);
      return 0;
    }

    if (fixtures->parsed()) {
      Dataset ds;
      if (fixturesKind == "rotation") {
        RotationFixtureOptions opts;
        opts.textures = standardTextures(fixturesSeed);
        opts.size = fixturesSize;
        ds = makeRotationFixtures(opts);
      } else {
        IlluminationFixtureOptions opts;
        opts.textures = illuminationTextures(fixturesSeed);
        opts.gains = {0.8, 1.2};
        opts.size = fixturesSize;
        ds = makeIlluminationFixtures(opts);
      }
      std::cout << writeDataset(ds, fixturesDir).string() << "\n";
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exitCodeFor(e);
  }
  return 0;
}
