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
#include <vector>

#include "robustctl/dynamics.hpp"
#include "robustctl/linalg.hpp"

namespace robustctl {

// ---------------------------------------------------------------------------
// Gate robustification against a single noise operator.
// ---------------------------------------------------------------------------

/// Hermitian involution R that anticommutes with a declared noise operator,
/// i.e. R^2 = I and R V R = -V.
class FlipOperator {
 public:
  FlipOperator(HermitianOp r, const HermitianOp &noise, const Tolerances &tol = {});

  const HermitianOp &op() const { return r_; }

 private:
  HermitianOp r_;
};

struct RobustGate {
  PulseSchedule schedule;
  /// Duration T of the input schedule.
  double base_duration = 0.0;
  /// ||E(V)|| of the output schedule.
  double error_norm = 0.0;
  /// |Tr(U_out^dagger U_T)| / d.
  double overlap = 0.0;
};

/// Builds the four-part robust schedule for the gate realized by `s`:
///
///   1. the input at half amplitude and double duration (time 2T),
///   2. a flip H = u_max R for pi / (2 u_max),
///   3. a loop that retraces the input backwards under -R H R and then
///      forwards under R H R, each at full speed (time 2T),
///   4. the same flip again.
///
/// In the frame after the first flip every toggled noise operator equals
/// minus its main-pass counterpart, and the two flip contributions cancel.
/// The result has duration 4T + pi / u_max and implements U_T up to a global
/// phase of -1. Both properties are verified before returning; a mismatch
/// throws ConstructionError.
RobustGate robustify_gate(const PulseSchedule &s, const HermitianOp &v, const FlipOperator &r,
                          const Tolerances &tol = {});

// ---------------------------------------------------------------------------
// Correctors.
// ---------------------------------------------------------------------------

/// The three directions V, K V K and i[K, V] a dwell along K can produce.
struct CorrectorSpan {
  HermitianOp v;
  HermitianOp kvk;
  HermitianOp commutator;
  /// Real dimension of their span (1, 2 or 3).
  int dimension = 0;
};

CorrectorSpan corrector_span(const HermitianOp &k, const HermitianOp &v, const Tolerances &tol = {});

struct SpanCoefficients {
  double a = 0.0;  // along V
  double b = 0.0;  // along K V K
  double c = 0.0;  // along i[K, V]
  double residual = 0.0;
};

/// Solves U_T E U_T^dagger = a V + b K V K + c i[K, V] in least squares.
/// Redundant directions get coefficient zero, earlier directions win. Returns
/// nothing when the residual exceeds 1e-9 ||E||.
std::optional<SpanCoefficients> single_corrector_coefficients(const HermitianOp &e, const HermitianOp &k,
                                                              const HermitianOp &v, const UnitaryOp &u_t,
                                                              const Tolerances &tol = {});

/// Lower bound ceil((dim_W + 1) / 2) on the number of correctors needed to
/// cover an error subspace of dimension dim_W.
int corrector_count_floor(int dim_w);

/// Involution [[sqrt(I - Y Y^dag), Y], [Y^dag, -sqrt(I - Y^dag Y)]] built from
/// a square contraction Y. The square roots come from one SVD of Y so the
/// intertwining relation holds to rounding.
HermitianOp halmos_involution(const Matrix &y);

struct CorrectorAxis {
  HermitianOp k;
  double beta = 0.0;
};

struct CorrectorOptions {
  /// Defaults to max(||B||, ||E||).
  std::optional<double> gamma1;
  /// Diagonal shift; defaults to ||E||.
  std::optional<double> shift;
};

/// Algebraic certificate alpha V + gamma1 i[K_1, V] + sum_j beta_j K_j V K_j = E.
struct CorrectorPlan {
  HermitianOp v;
  HermitianOp target;
  /// Columns: +1 eigenvectors of V, then -1 eigenvectors.
  Matrix v_basis;
  /// Present when the off-diagonal block of E is nonzero.
  std::optional<HermitianOp> off_diagonal_axis;
  double gamma1 = 0.0;
  std::vector<CorrectorAxis> diagonal_axes;
  double alpha = 0.0;
  double shift = 0.0;
  double residual = 0.0;

  /// Distinct axes counting the baseline along V.
  std::size_t axis_count() const;
  HermitianOp reconstruct() const;
};

/// Three-step synthesis in the eigenbasis of V: one Halmos axis absorbs the
/// off-diagonal block, rank-one partial-isometry axes built from a shared-
/// weights decomposition absorb the diagonal blocks, and a baseline along V
/// fixes the remainder. Requires V^2 = I with equal +1/-1 multiplicities.
CorrectorPlan synthesize_correctors(const HermitianOp &e, const HermitianOp &v, const CorrectorOptions &opts = {},
                                    const Tolerances &tol = {});

/// A hold at fixed rotation angle phi about an axis K for `duration`, which
/// contributes duration * e^{iK phi} V e^{-iK phi}.
struct Dwell {
  double angle = 0.0;
  double duration = 0.0;
};

/// Dwells on one axis whose total contribution is alpha V + beta K V K +
/// gamma i[K, V]. Exists iff [[alpha, gamma], [gamma, beta]] is positive
/// semidefinite (at most two dwells).
std::optional<std::vector<Dwell>> dwells_for_coefficients(double alpha, double beta, double gamma,
                                                          double tol = 1e-12);

struct AxisDwells {
  HermitianOp axis;
  std::vector<Dwell> dwells;
};

/// Per-axis dwell realization of a plan, or nothing when some axis target is
/// outside the realizable cone (any plan with an off-diagonal axis, or with a
/// negative baseline).
std::optional<std::vector<AxisDwells>> realize_plan(const CorrectorPlan &plan);

/// Sum over axes and dwells of duration * e^{iK phi} V e^{-iK phi}.
HermitianOp dwell_contribution(const std::vector<AxisDwells> &dwells, const HermitianOp &v);

}  // namespace robustctl
