// Copyright 2026 The walkeropt Authors. All rights reserved.
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

namespace walkeropt {

// Argument outside the mathematical domain of an operation (e >= 1, n = 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Numerical or geometric failure: degenerate sensor frame, non-converging
// iteration, footprint with no ground intersection.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Target region that cannot be tessellated (self-intersecting or zero area).
class DegenerateRegion : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Scenario text that is not well-formed.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Scenario value that violates a constraint. key() is the dotted path of the
// offending entry, e.g. "orbit.e" or "region.boundary[2].lat".
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string key, const std::string& what)
      : std::invalid_argument(key + ": " + what), key_(std::move(key)) {}

  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

// Output file could not be opened or written; what() names the path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace walkeropt
