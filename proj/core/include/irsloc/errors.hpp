// Copyright 2026 The irsloc Authors
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

#ifndef IRSLOC_ERRORS_HPP
#define IRSLOC_ERRORS_HPP

#include <stdexcept>

namespace irsloc {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coincident points or another geometry with no defined direction.
class GeometryError : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// The requested distribution collapses to a point mass.
class DegenerateDistributionError : public Error {
 public:
  using Error::Error;
};

/// A non-finite or out-of-tolerance intermediate in a closed-form evaluation.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Invalid scenario description. The message carries the offending key path.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace irsloc

#endif  // IRSLOC_ERRORS_HPP
