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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lbptex {

enum class Condition { Reference, Rotation, Illumination };

std::string_view conditionName(Condition c) noexcept;

struct ManifestRecord {
  std::filesystem::path path;  // resolved against the manifest directory
  std::string textureId;
  Condition condition = Condition::Reference;
  std::optional<double> angle;        // rotation records
  std::optional<int> illumination;    // illumination records
};

struct DatasetManifest {
  std::vector<ManifestRecord> records;

  /// Texture ids in order of their reference records.
  std::vector<std::string> textureIds() const;
  std::size_t testCount() const noexcept;

  /// Throws ManifestValidationError unless every texture has exactly one
  /// reference record and every test record names a known texture.
  void validate() const;
};

/// Parses a JSON array of {path, texture_id, condition, angle?, illum?}.
/// Relative paths are resolved against `baseDir`. Throws ManifestParseError
/// for malformed documents and ManifestValidationError for invariant
/// violations.
DatasetManifest parseManifest(std::string_view text,
                              const std::filesystem::path& baseDir);

/// parseManifest on a file, additionally checking that every image path is
/// readable. Throws ManifestMissingFileError when the manifest itself is
/// missing.
DatasetManifest ingestManifest(const std::filesystem::path& path);

/// Serializes with paths relative to `baseDir` where possible.
std::string manifestToJson(const DatasetManifest& manifest,
                           const std::filesystem::path& baseDir);

}  // namespace lbptex
