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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "lbptex/dataset.hpp"
#include "lbptex/errors.hpp"
#include "lbptex/image_io.hpp"

namespace lbptex {

std::vector<const Sample*> Dataset::references() const {
  std::vector<const Sample*> out;
  for (const auto& s : samples) {
    if (s.condition == Condition::Reference) out.push_back(&s);
  }
  return out;
}

std::vector<const Sample*> Dataset::tests() const {
  std::vector<const Sample*> out;
  for (const auto& s : samples) {
    if (s.condition != Condition::Reference) out.push_back(&s);
  }
  return out;
}

Dataset loadDataset(const DatasetManifest& manifest) {
  manifest.validate();
  Dataset ds;
  ds.samples.reserve(manifest.records.size());
  for (const auto& r : manifest.records) {
    Sample s;
    s.name = r.path.generic_string();
    s.textureId = r.textureId;
    s.condition = r.condition;
    s.angle = r.angle.value_or(0.0);
    s.illumination = r.illumination.value_or(0);
    s.image = readImage(r.path);
    ds.samples.push_back(std::move(s));
  }
  return ds;
}

namespace {

std::string fileStem(const Sample& s, std::size_t index) {
  std::ostringstream name;
  name << index << '_' << s.textureId << '_' << conditionName(s.condition);
  if (s.condition == Condition::Rotation) name << '_' << s.angle;
  if (s.condition == Condition::Illumination) name << '_' << s.illumination;
  std::string out = name.str();
  std::replace_if(out.begin(), out.end(),
                  [](char c) { return !(std::isalnum(static_cast<unsigned char>(c)) ||
                                        c == '_' || c == '-'); },
                  '-');
  return out;
}

std::uint8_t toPixel(double v) {
  return static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
}

}  // namespace

std::filesystem::path writeDataset(const Dataset& dataset,
                                   const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  DatasetManifest manifest;
  for (std::size_t i = 0; i < dataset.samples.size(); ++i) {
    const Sample& s = dataset.samples[i];
    const auto path = dir / (fileStem(s, i) + ".pgm");
    writePgm(path, s.image);
    ManifestRecord r;
    r.path = path;
    r.textureId = s.textureId;
    r.condition = s.condition;
    if (s.condition == Condition::Rotation) r.angle = s.angle;
    if (s.condition == Condition::Illumination) r.illumination = s.illumination;
    manifest.records.push_back(std::move(r));
  }
  const auto manifestPath = dir / "manifest.json";
  std::ofstream out(manifestPath, std::ios::binary);
  out << manifestToJson(manifest, dir);
  if (!out) throw DataError("cannot write '" + manifestPath.string() + "'");
  return manifestPath;
}

GrayImage makeTexture(const TextureRecipe& recipe, int width, int height) {
  GrayImage img(width, height, toPixel(recipe.level));
  std::mt19937_64 rng(recipe.seed);
  const double twoPi = 2.0 * std::numbers::pi;

  switch (recipe.kind) {
    case TextureKind::Constant:
      break;
    case TextureKind::RandomField: {
      std::uniform_int_distribution<int> dist(recipe.level - recipe.amplitude,
                                              recipe.level + recipe.amplitude);
      for (auto& px : img.pixels()) px = toPixel(dist(rng));
      break;
    }
    case TextureKind::Stripes: {
      const double theta = recipe.orientation * std::numbers::pi / 180.0;
      const double kx = std::cos(theta) / recipe.period;
      const double ky = std::sin(theta) / recipe.period;
      for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
          img(x, y) = toPixel(recipe.level +
                              recipe.amplitude * std::sin(twoPi * (kx * x + ky * y)));
        }
      }
      break;
    }
    case TextureKind::Checker: {
      const double cell = recipe.period / 2.0;
      for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
          const long parity = static_cast<long>(std::floor(x / cell)) +
                              static_cast<long>(std::floor(y / cell));
          img(x, y) = toPixel(recipe.level +
                              (parity % 2 == 0 ? recipe.amplitude : -recipe.amplitude));
        }
      }
      break;
    }
    case TextureKind::Blobs: {
      // A few plane waves with random direction and phase.
      constexpr int kWaves = 6;
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      double fx[kWaves], fy[kWaves], phase[kWaves];
      for (int i = 0; i < kWaves; ++i) {
        const double dir = twoPi * unit(rng);
        const double period = recipe.period * (0.75 + 0.5 * unit(rng));
        fx[i] = std::cos(dir) / period;
        fy[i] = std::sin(dir) / period;
        phase[i] = twoPi * unit(rng);
      }
      // The wave sum has standard deviation sqrt(kWaves / 2); tanh keeps the
      // result inside level +- amplitude.
      const double norm = 1.0 / std::sqrt(kWaves / 2.0);
      for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
          double v = 0.0;
          for (int i = 0; i < kWaves; ++i) {
            v += std::cos(twoPi * (fx[i] * x + fy[i] * y) + phase[i]);
          }
          img(x, y) = toPixel(recipe.level + recipe.amplitude * std::tanh(norm * v));
        }
      }
      break;
    }
  }
  return img;
}

Dataset makeRotationFixtures(const RotationFixtureOptions& options) {
  if (options.size <= 0) throw ArgumentError("fixture size must be positive");
  // Large enough that a size x size crop stays valid at any angle.
  const int field = static_cast<int>(std::ceil(options.size * std::numbers::sqrt2)) + 4;
  Dataset ds;
  for (const auto& recipe : options.textures) {
    const GrayImage base = makeTexture(recipe, field, field);
    ds.samples.push_back({recipe.id + "@ref", recipe.id, Condition::Reference, 0.0,
                          0, cropCenter(base, options.size, options.size)});
  }
  for (const auto& recipe : options.textures) {
    const GrayImage base = makeTexture(recipe, field, field);
    for (double angle : options.angles) {
      const RotatedImage rotated = rotateImage(base, angle);
      std::ostringstream name;
      name << recipe.id << "@rot" << angle;
      ds.samples.push_back({name.str(), recipe.id, Condition::Rotation, angle, 0,
                            cropCenter(rotated.image, options.size, options.size)});
    }
  }
  return ds;
}

Dataset makeIlluminationFixtures(const IlluminationFixtureOptions& options) {
  Dataset ds;
  for (const auto& recipe : options.textures) {
    ds.samples.push_back({recipe.id + "@ref", recipe.id, Condition::Reference, 0.0,
                          0, makeTexture(recipe, options.size, options.size)});
  }
  for (const auto& recipe : options.textures) {
    const GrayImage base = makeTexture(recipe, options.size, options.size);
    for (std::size_t i = 0; i < options.gains.size(); ++i) {
      LookupTable gain{};
      for (int v = 0; v < 256; ++v) gain[v] = toPixel(options.gains[i] * v);
      std::ostringstream name;
      name << recipe.id << "@gain" << options.gains[i];
      ds.samples.push_back({name.str(), recipe.id, Condition::Illumination, 0.0,
                            static_cast<int>(i + 1), applyMonotoneMap(base, gain)});
    }
  }
  return ds;
}

std::vector<TextureRecipe> separableTextures(std::uint64_t seed) {
  return {
      {"flat", TextureKind::Constant, 128, 0, 8.0, 0.0, seed},
      {"noise", TextureKind::RandomField, 128, 127, 8.0, 0.0, seed + 1},
  };
}

std::vector<TextureRecipe> standardTextures(std::uint64_t seed) {
  return {
      {"grain", TextureKind::RandomField, 128, 100, 8.0, 0.0, seed},
      {"stripes", TextureKind::Stripes, 128, 100, 8.0, 20.0, seed + 1},
      {"checker", TextureKind::Checker, 128, 100, 12.0, 0.0, seed + 2},
      {"blobs", TextureKind::Blobs, 128, 100, 24.0, 0.0, seed + 3},
  };
}

std::vector<TextureRecipe> illuminationTextures(std::uint64_t seed) {
  auto textures = standardTextures(seed);
  // 16..176 keeps gains up to 1.4 free of clipping.
  for (auto& t : textures) {
    t.level = 96;
    t.amplitude = 80;
  }
  return textures;
}

}  // namespace lbptex
