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

#include <gtest/gtest.h>

#include <set>

#include "lbptex/errors.hpp"
#include "lbptex/experiments.hpp"
#include "lbptex/report.hpp"

namespace lbptex {
namespace {

Dataset separable(std::vector<double> angles = {30, 60, 90}) {
  RotationFixtureOptions opts;
  opts.textures = separableTextures(7);
  opts.angles = std::move(angles);
  opts.size = 32;
  return makeRotationFixtures(opts);
}

Dataset standard(int size = 48) {
  RotationFixtureOptions opts;
  opts.textures = standardTextures(3);
  opts.size = size;
  return makeRotationFixtures(opts);
}

ExperimentConfig configFor(std::vector<Variant> variants) {
  ExperimentConfig c;
  c.variants = std::move(variants);
  return c;
}

TEST(Fixtures, ShapesAndDeterminism) {
  const Dataset a = standard();
  const Dataset b = standard();
  ASSERT_EQ(a.samples.size(), 4u * 4u);
  EXPECT_EQ(a.references().size(), 4u);
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    EXPECT_EQ(a.samples[i].image, b.samples[i].image);
    EXPECT_EQ(a.samples[i].image.width(), 48);
  }
  TextureRecipe r;
  r.kind = TextureKind::Constant;
  r.level = 77;
  EXPECT_EQ(makeTexture(r, 5, 5), GrayImage(5, 5, 77));
}

TEST(RotationExperiment, SeparablePairIsPerfect) {
  ExperimentConfig c = configFor({Variant::Min});
  c.metrics = {Metric::Ordinal};
  const auto reports = runRotationExperiment(separable(), c);
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_EQ(reports[0].accuracy, 100.0);
  EXPECT_EQ(reports[0].confusion.total(), 6u);
}

TEST(RotationExperiment, SelfClassificationForEveryVariant) {
  const Dataset ds = standard();
  Dataset self;
  for (const auto* r : ds.references()) {
    self.samples.push_back(*r);
    Sample t = *r;
    t.condition = Condition::Rotation;
    t.angle = 0.0;
    self.samples.push_back(t);
  }
  ExperimentConfig c = configFor(std::vector<Variant>(allVariants().begin(), allVariants().end()));
  for (const auto& rep : runRotationExperiment(self, c)) {
    EXPECT_EQ(rep.accuracy, 100.0) << variantName(rep.variant) << "/" << metricName(rep.metric);
    for (const auto& [id, d] : rep.selfDistances) EXPECT_NEAR(d, 0.0, 1e-12);
  }
}

TEST(RotationExperiment, ReportsAreConsistent) {
  const Dataset ds = standard();
  ExperimentConfig c = configFor({Variant::Classic, Variant::Uni, Variant::Num});
  c.ciMode = CiMode::Concat;
  const auto reports = runRotationExperiment(ds, c);
  ASSERT_EQ(reports.size(), 6u);
  std::set<std::string> expected;
  for (const auto* t : ds.tests()) expected.insert(t->name);
  for (const auto& rep : reports) {
    EXPECT_EQ(rep.accuracy, accuracyRate(rep.confusion));
    EXPECT_EQ(rep.confusion.total(), ds.tests().size());
    std::set<std::string> seen;
    for (const auto& ci : rep.classified) {
      seen.insert(ci.name);
      EXPECT_EQ(ci.distances.size(), ds.references().size());
    }
    EXPECT_EQ(seen, expected);
  }
}

TEST(RotationExperiment, MissingReferenceIsManifestError) {
  Dataset ds = separable();
  ds.samples.erase(ds.samples.begin());
  EXPECT_THROW(runRotationExperiment(ds, configFor({Variant::Uni})), ManifestValidationError);
}

TEST(RotationExperiment, ThreadCountDoesNotChangeResults) {
  const Dataset ds = standard();
  ExperimentConfig one = configFor({Variant::Num, Variant::Clbp});
  one.threads = 1;
  one.noiseVariance = 0.02;
  ExperimentConfig many = one;
  many.threads = 4;
  const auto a = reportsToJson(runRotationExperiment(ds, one));
  const auto b = reportsToJson(runRotationExperiment(ds, many));
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(RadiusSweep, SingleRadiusMatchesRotation) {
  const Dataset ds = standard();
  ExperimentConfig c = configFor({Variant::Uni, Variant::Med});
  const auto rows = runRadiusSweep(ds, c, {1.0});
  const auto reports = runRotationExperiment(ds, c);
  ASSERT_EQ(rows.size(), reports.size());
  for (std::size_t i = 0; i < rows.size(); ++i) EXPECT_EQ(rows[i].accuracy, reports[i].accuracy);
  EXPECT_THROW(runRadiusSweep(ds, c, {}), ArgumentError);
}

TEST(RadiusSweep, SeparablePairPerfectAtEveryRadius) {
  ExperimentConfig c = configFor({Variant::Min, Variant::Uni, Variant::Num});
  for (const auto& row : runRadiusSweep(separable(), c, {1, 2, 3})) {
    EXPECT_EQ(row.accuracy, 100.0) << variantName(row.variant) << " R=" << row.radius;
  }
}

TEST(NoiseExperiment, ZeroVarianceMatchesClean) {
  for (const auto& row : runNoiseExperiment(standard(), configFor({Variant::Uni, Variant::Med}),
                                            0.0, 5)) {
    EXPECT_EQ(row.noisyAccuracy, row.cleanAccuracy);
  }
  EXPECT_THROW(runNoiseExperiment(standard(), configFor({Variant::Uni}), -1.0, 5),
               ArgumentError);
}

TEST(NoiseExperiment, NoiseDoesNotHelp) {
  ExperimentConfig c = configFor({Variant::Classic, Variant::Uni, Variant::Num, Variant::Med});
  c.metrics = {Metric::Ordinal};
  for (const auto& row : runNoiseExperiment(standard(), c, 0.06, 11)) {
    EXPECT_LE(row.noisyAccuracy, row.cleanAccuracy) << variantName(row.variant);
  }
}

TEST(NoiseExperiment, Deterministic) {
  const auto c = configFor({Variant::Num});
  const auto a = noiseRowsToJson(runNoiseExperiment(standard(), c, 0.06, 9), c, 0.06, 9);
  const auto b = noiseRowsToJson(runNoiseExperiment(standard(), c, 0.06, 9), c, 0.06, 9);
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(IlluminationExperiment, GainChangeKeepsSignPatterns) {
  IlluminationFixtureOptions opts;
  opts.textures = illuminationTextures(4);
  opts.gains = {1.2};
  opts.size = 48;
  const Dataset ds = makeIlluminationFixtures(opts);
  ASSERT_EQ(ds.tests().size(), 4u);
  for (const auto* t : ds.tests()) EXPECT_EQ(t->condition, Condition::Illumination);
  ExperimentConfig c = configFor({Variant::Classic, Variant::Min, Variant::Uni, Variant::Num});
  for (const auto& row : runIlluminationExperiment(ds, c, {CiMode::None})) {
    EXPECT_EQ(row.accuracy, 100.0) << variantName(row.variant) << "/" << metricName(row.metric);
  }
  EXPECT_THROW(runIlluminationExperiment(ds, c, {}), ArgumentError);
}

TEST(IlluminationExperiment, AllCiModesRun) {
  IlluminationFixtureOptions opts;
  opts.textures = illuminationTextures(4);
  opts.gains = {0.8, 1.2};
  opts.size = 40;
  const auto rows = runIlluminationExperiment(makeIlluminationFixtures(opts),
                                              configFor({Variant::Num, Variant::Clbp}),
                                              {CiMode::None, CiMode::Joint, CiMode::Concat});
  EXPECT_EQ(rows.size(), 3u * 2u * 2u);
  for (const auto& r : rows) {
    EXPECT_EQ(r.confusion.total(), 8u);
    EXPECT_EQ(r.accuracy, accuracyRate(r.confusion));
  }
}

TEST(FeatureExtractor, ShapesPerVariant) {
  const GrayImage img = standard().samples[0].image;
  ExperimentConfig c;
  EXPECT_EQ(FeatureExtractor(c, Variant::Uni).feature(img).size(), 10u);
  EXPECT_EQ(FeatureExtractor(c, Variant::Ltp).feature(img).size(), 512u);
  EXPECT_EQ(FeatureExtractor(c, Variant::Clbp).feature(img).size(), 40u);
  EXPECT_EQ(FeatureExtractor(c, Variant::Dom).feature(img).size(), 256u);
  c.ciMode = CiMode::Joint;
  FeatureExtractor joint(c, Variant::Num);
  EXPECT_THROW(joint.feature(img), ArgumentError);
  joint.fit({&img});
  EXPECT_EQ(joint.feature(img).size(), 12u * 8u);
  c.ciMode = CiMode::Concat;
  FeatureExtractor concat(c, Variant::Num);
  concat.fit({&img});
  EXPECT_EQ(concat.feature(img).size(), 12u + 8u);
}

TEST(ExperimentConfig, Validation) {
  ExperimentConfig c;
  c.variants.clear();
  EXPECT_THROW(c.validate(), ArgumentError);
  c = ExperimentConfig{};
  c.ciBins = 0;
  EXPECT_THROW(c.validate(), ArgumentError);
  c = ExperimentConfig{};
  c.dominantCoverage = 1.5;
  EXPECT_THROW(c.validate(), ArgumentError);
  EXPECT_EQ(parseCiMode("concat"), CiMode::Concat);
  EXPECT_THROW(parseCiMode("both"), ArgumentError);
}

}  // namespace
}  // namespace lbptex
