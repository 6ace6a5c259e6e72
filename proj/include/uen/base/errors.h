// uen/base/errors.h

// Copyright 2026  The uen authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef UEN_BASE_ERRORS_H_
#define UEN_BASE_ERRORS_H_

#include <sstream>
#include <stdexcept>
#include <string>

namespace uen {

// All library errors derive from uen::Error so callers (the CLI in
// particular) can map them onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Tensor shape or feature-dimension mismatch.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Bad caller-supplied data: too-short audio, wrong sample rate, empty pools.
class InputError : public Error {
 public:
  using Error::Error;
};

// API misuse, e.g. stepping an optimizer before gradients exist.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Unresolvable references inside otherwise well-formed data.
class DataError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class MetricUndefinedError : public Error {
 public:
  using Error::Error;
};

class CheckpointError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

// A loss went non-finite during training.
class TrainingDivergedError : public Error {
 public:
  using Error::Error;
};

namespace internal {
template <typename... Args>
std::string StrCat(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}
}  // namespace internal

}  // namespace uen

#define UEN_THROW(ErrorType, ...) \
  throw ErrorType(::uen::internal::StrCat(__VA_ARGS__))

#endif  // UEN_BASE_ERRORS_H_
