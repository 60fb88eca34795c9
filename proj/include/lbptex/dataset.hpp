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
#include <filesystem>
#include <string>
#include <vector>

#include "lbptex/image.hpp"
#include "lbptex/manifest.hpp"

namespace lbptex {

/// Images of a manifest, decoded and held in memory.
struct Sample {
  std::string name;  // path or synthetic label
  std::string textureId;
  Condition condition = Condition::Reference;
  double angle = 0.0;
  int illumination = 0;
  GrayImage image;
};

struct Dataset {
  std::vector<Sample> samples;

  std::vector<const Sample*> references() const;
  std::vector<const Sample*> tests() const;
};

/// Decodes every image of a validated manifest.
Dataset loadDataset(const DatasetManifest& manifest);

/// Writes the images as PGM files plus a manifest.json into `dir`, returning
/// the manifest path.
std::filesystem::path writeDataset(const Dataset& dataset,
                                   const std::filesystem::path& dir);

enum class TextureKind { Constant, RandomField, Stripes, Checker, Blobs };

struct TextureRecipe {
  std::string id;
  TextureKind kind = TextureKind::Constant;
  int level = 128;        // constant level / mean gray
  int amplitude = 100;    // half peak-to-peak for patterned textures
  double period = 8.0;    // stripes, checker, blobs
  double orientation = 0; // degrees, stripes
  std::uint64_t seed = 1;
};

GrayImage makeTexture(const TextureRecipe& recipe, int width, int height);

struct RotationFixtureOptions {
  std::vector<TextureRecipe> textures;
  std::vector<double> angles{30.0, 60.0, 90.0};
  int size = 64;  // side of the reference and test crops
};

/// One unrotated reference crop per texture plus one rotated crop per angle,
/// all cut from the same synthesized field.
Dataset makeRotationFixtures(const RotationFixtureOptions& options);

struct IlluminationFixtureOptions {
  std::vector<TextureRecipe> textures;
  std::vector<double> gains{1.2};
  int size = 64;
};

/// Reference crops and gain-scaled copies (v -> round(gain * v), clipped).
Dataset makeIlluminationFixtures(const IlluminationFixtureOptions& options);

/// Constant field and seeded high-contrast random field.
std::vector<TextureRecipe> separableTextures(std::uint64_t seed);

/// Four-texture set used by the noise and determinism checks.
std::vector<TextureRecipe> standardTextures(std::uint64_t seed);

/// The standard kinds in a darker, narrower range so that gain changes up
/// to 1.4 never clip.
std::vector<TextureRecipe> illuminationTextures(std::uint64_t seed);

}  // namespace lbptex
