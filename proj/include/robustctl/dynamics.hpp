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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "robustctl/linalg.hpp"

namespace robustctl {

/// Constant generator held for `duration` (generator in rad/time).
struct ControlSegment {
  HermitianOp generator;
  double duration = 0.0;
};

/// Piecewise-constant control program with a global amplitude cap
/// ||H(t)|| <= u_max. Segments run in order; later segments act on the left.
class PulseSchedule {
 public:
  PulseSchedule() = default;
  PulseSchedule(std::size_t dim, double u_max, std::vector<ControlSegment> segments);

  std::size_t dim() const { return dim_; }
  double u_max() const { return u_max_; }
  const std::vector<ControlSegment> &segments() const { return segments_; }
  double total_duration() const;

 private:
  std::size_t dim_ = 0;
  double u_max_ = 0.0;
  std::vector<ControlSegment> segments_;
};

/// s1 followed by s2. The cap of the result is the larger of the two caps.
PulseSchedule concatenate(const PulseSchedule &s1, const PulseSchedule &s2);

/// Real span of traceless Hermitian operators with an orthonormal basis.
class NoiseSpace {
 public:
  NoiseSpace() = default;
  explicit NoiseSpace(OperatorBasis basis);

  /// Orthonormalizes the real span of `ops`.
  static NoiseSpace span(std::size_t dim, const std::vector<HermitianOp> &ops, const Tolerances &tol = {});
  static NoiseSpace from_paulis(const std::vector<std::string> &labels);
  /// su(2^n): every non-identity Pauli string on n qubits.
  static NoiseSpace full_su(std::size_t n_qubits);

  std::size_t dim() const { return basis_.dim(); }
  std::size_t size() const { return basis_.size(); }
  const OperatorBasis &basis() const { return basis_; }
  const HermitianOp &operator[](std::size_t i) const { return basis_[i]; }

 private:
  OperatorBasis basis_;
};

/// First-order errors of one schedule against every element of a noise
/// basis, per unit noise strength.
struct ErrorReport {
  std::vector<HermitianOp> errors;
  std::vector<double> norms;
  double worst_norm = 0.0;
  double total_duration = 0.0;
  std::vector<std::string> warnings;
};

UnitaryOp propagator(const PulseSchedule &s);

/// Propagator of H(t) + delta * V (the quasi-static noise model).
UnitaryOp perturbed_propagator(const PulseSchedule &s, const HermitianOp &v, double delta);

/// U(t) for 0 <= t <= T.
UnitaryOp propagator_at(const PulseSchedule &s, double t);

/// E(V) = integral_0^T U^dagger(t) V U(t) dt, evaluated segment by segment in
/// closed form in each generator's eigenbasis.
HermitianOp first_order_error(const PulseSchedule &s, const HermitianOp &v, const Tolerances &tol = {});

ErrorReport error_report(const PulseSchedule &s, const NoiseSpace &noise, const Tolerances &tol = {});

struct SeriesPoint {
  double t = 0.0;
  /// ||integral_0^t U^dagger V U||.
  double norm = 0.0;
  /// <psi0| integral_0^t U^dagger V U |psi0>, when a state is supplied.
  std::optional<double> state_value;
};

std::vector<SeriesPoint> susceptibility_series(const PulseSchedule &s, const HermitianOp &v, int n_points,
                                               const Vector *psi0 = nullptr, const Tolerances &tol = {});

/// <psi0| E(V) |psi0>.
double state_error(const PulseSchedule &s, const HermitianOp &v, const Vector &psi0, const Tolerances &tol = {});

struct SpeedCertificate {
  /// Largest chord speed ||y(t_{k+1}) - y(t_k)|| / dt on the sample grid.
  double finite_difference_max = 0.0;
  /// Largest exact speed ||[H_k, V]|| over segments.
  double analytic_max = 0.0;
  /// 2 u_max ||V||.
  double bound = 0.0;
};

SpeedCertificate speed_certificate(const PulseSchedule &s, const HermitianOp &v, int n_samples);

struct FeasibilityResult {
  bool feasible = true;
  /// Dimension of the subspace of the noise space commuting with every generator.
  std::size_t fixed_dimension = 0;
  /// Unit-norm fixed vector when infeasible.
  std::optional<HermitianOp> witness;
};

/// Checks whether some nonzero A in the noise space commutes with every
/// control generator; such an A can never be averaged away.
FeasibilityResult fixed_vector_check(const std::vector<HermitianOp> &generators, const NoiseSpace &noise,
                                     const Tolerances &tol = {});

}  // namespace robustctl
