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

#include <stdexcept>
#include <string>

namespace lbptex {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller passed a value outside the operation's domain.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition (e.g. neighborhood margin) does not hold.
class PreconditionError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

/// A sampling coordinate falls outside the image.
class BoundsError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

/// Input data is inconsistent or corrupt (bad labels, unreadable images).
class DataError : public Error {
 public:
  using Error::Error;
};

/// The data is valid but cannot support the requested statistic.
class DegenerateDataError : public DataError {
 public:
  using DataError::DataError;
};

class ImageIoError : public DataError {
 public:
  using DataError::DataError;
};

/// Dataset manifest problems. The subclasses let callers tell a missing
/// file, a malformed document and a semantic violation apart.
class ManifestError : public Error {
 public:
  using Error::Error;
};

class ManifestMissingFileError : public ManifestError {
 public:
  using ManifestError::ManifestError;
};

class ManifestParseError : public ManifestError {
 public:
  using ManifestError::ManifestError;
};

class ManifestValidationError : public ManifestError {
 public:
  using ManifestError::ManifestError;
};

/// Process exit code for an exception escaping a CLI command:
/// 2 for configuration/manifest problems, 3 for data problems, 1 otherwise.
int exitCodeFor(const std::exception& e) noexcept;

}  // namespace lbptex
