// Copyright 2026 The robustctl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace robustctl {

/// Input violates a documented precondition (bad dimensions, non-Hermitian
/// generator, amplitude cap exceeded, malformed file, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The input is well formed but outside what a construction supports.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction produced a result that failed its own numerical
/// post-verification. Carries the residuals so callers can report them.
class ConstructionError : public std::runtime_error {
 public:
  ConstructionError(const std::string &what, double primary_residual, double secondary_residual = 0.0)
      : std::runtime_error(what), primary_residual_(primary_residual), secondary_residual_(secondary_residual) {}

  double primary_residual() const { return primary_residual_; }
  double secondary_residual() const { return secondary_residual_; }

 private:
  double primary_residual_;
  double secondary_residual_;
};

}  // namespace robustctl
