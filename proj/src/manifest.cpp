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

#include "lbptex/manifest.hpp"

#include <fstream>
#include <iterator>
#include <map>
#include <set>

#include "json.hpp"

#include "lbptex/errors.hpp"

namespace lbptex {

using nlohmann::json;

std::string_view conditionName(Condition c) noexcept {
  switch (c) {
    case Condition::Reference:
      return "reference";
    case Condition::Rotation:
      return "rotation";
    case Condition::Illumination:
      return "illumination";
  }
  return "reference";
}

std::vector<std::string> DatasetManifest::textureIds() const {
  std::vector<std::string> ids;
  for (const auto& r : records) {
    if (r.condition == Condition::Reference) ids.push_back(r.textureId);
  }
  return ids;
}

std::size_t DatasetManifest::testCount() const noexcept {
  std::size_t n = 0;
  for (const auto& r : records) {
    if (r.condition != Condition::Reference) ++n;
  }
  return n;
}

void DatasetManifest::validate() const {
  std::map<std::string, int> references;
  for (const auto& r : records) {
    if (r.textureId.empty()) {
      throw ManifestValidationError("record '" + r.path.string() +
                                    "' has an empty texture_id");
    }
    if (r.condition == Condition::Reference && ++references[r.textureId] > 1) {
      throw ManifestValidationError("texture '" + r.textureId +
                                    "' has more than one reference record");
    }
  }
  for (const auto& r : records) {
    if (r.condition != Condition::Reference && references.count(r.textureId) == 0) {
      throw ManifestValidationError("texture '" + r.textureId +
                                    "' has no reference record");
    }
  }
  if (references.empty()) {
    throw ManifestValidationError("manifest has no reference records");
  }
}

namespace {

Condition parseCondition(const std::string& s) {
  if (s == "reference") return Condition::Reference;
  if (s == "rotation") return Condition::Rotation;
  if (s == "illumination") return Condition::Illumination;
  throw ManifestParseError("unknown condition '" + s + "'");
}

ManifestRecord parseRecord(const json& j, std::size_t index,
                           const std::filesystem::path& baseDir) {
  const std::string where = "record " + std::to_string(index);
  if (!j.is_object()) throw ManifestParseError(where + " is not an object");
  const auto stringField = [&](const char* key) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_string()) {
      throw ManifestParseError(where + ": missing string field '" + key + "'");
    }
    return it->get<std::string>();
  };

  ManifestRecord r;
  const std::filesystem::path path = stringField("path");
  if (path.empty()) throw ManifestParseError(where + ": empty path");
  r.path = path.is_absolute() ? path : baseDir / path;
  r.textureId = stringField("texture_id");
  r.condition = parseCondition(stringField("condition"));
  if (auto it = j.find("angle"); it != j.end() && !it->is_null()) {
    if (!it->is_number()) throw ManifestParseError(where + ": angle must be a number");
    r.angle = it->get<double>();
  }
  if (auto it = j.find("illum"); it != j.end() && !it->is_null()) {
    if (!it->is_number_integer()) {
      throw ManifestParseError(where + ": illum must be an integer");
    }
    r.illumination = it->get<int>();
  }
  return r;
}

}  // namespace

DatasetManifest parseManifest(std::string_view text,
                              const std::filesystem::path& baseDir) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ManifestParseError(std::string("manifest is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ManifestParseError("manifest must be a JSON array");
  DatasetManifest m;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    m.records.push_back(parseRecord(doc[i], i, baseDir));
  }
  m.validate();
  return m;
}

DatasetManifest ingestManifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ManifestMissingFileError("cannot open manifest '" + path.string() + "'");
  const std::string text{std::istreambuf_iterator<char>(in),
                         std::istreambuf_iterator<char>()};
  DatasetManifest m = parseManifest(text, path.parent_path());
  for (const auto& r : m.records) {
    std::ifstream probe(r.path, std::ios::binary);
    if (!probe) {
      throw ManifestValidationError("image '" + r.path.string() +
                                    "' is not readable");
    }
  }
  return m;
}

std::string manifestToJson(const DatasetManifest& manifest,
                           const std::filesystem::path& baseDir) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& r : manifest.records) {
    nlohmann::ordered_json j;
    std::filesystem::path p = r.path;
    if (!baseDir.empty()) {
      const auto rel = r.path.lexically_relative(baseDir);
      if (!rel.empty() && *rel.begin() != "..") p = rel;
    }
    j["path"] = p.generic_string();
    j["texture_id"] = r.textureId;
    j["condition"] = std::string(conditionName(r.condition));
    if (r.angle) j["angle"] = *r.angle;
    if (r.illumination) j["illum"] = *r.illumination;
    doc.push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

}  // namespace lbptex
