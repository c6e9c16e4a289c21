// Copyright 2026 The Authors.
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
#include <utility>

namespace lrcm {

/// An argument lies outside the universe or domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An exhaustive operation was asked to work on an instance beyond its cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Malformed input (duplicate lattice members, bad JSON shape, ...).
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A construction or validation precondition failed. `condition()` names the
/// failing condition, e.g. "(iv)" for a set system or "Z2" for a lattice.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string condition, const std::string& detail)
      : std::invalid_argument("condition " + condition + " violated: " + detail),
        condition_(std::move(condition)) {}

  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

}  // namespace lrcm
