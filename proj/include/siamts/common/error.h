// Copyright 2026 The SiamTS Authors.
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

#ifndef SIAMTS_COMMON_ERROR_H_
#define SIAMTS_COMMON_ERROR_H_

#include <stdexcept>
#include <string>

namespace siamts {

// Base of every error the library raises. The CLI maps the concrete
// subclasses onto distinct exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid configuration or argument combination.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed, missing or inconsistent input data.
class DataError : public Error {
 public:
  using Error::Error;
};

// Non-finite values, degenerate vectors and other numerical failures.
class NumericError : public Error {
 public:
  using Error::Error;
};

// Tensor extents that do not fit the operation they were passed to.
class ShapeError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace siamts

#endif  // SIAMTS_COMMON_ERROR_H_
