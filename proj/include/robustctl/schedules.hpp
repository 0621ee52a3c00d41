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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "robustctl/dynamics.hpp"
#include "robustctl/linalg.hpp"

namespace robustctl {

struct ScheduleEntry {
  double p = 0.0;
  UnitaryOp u;
};

/// Mixed-unitary channel X -> sum_m p_m U_m^dagger X U_m.
class MixedUnitarySchedule {
 public:
  MixedUnitarySchedule() = default;
  MixedUnitarySchedule(std::size_t dim, std::vector<ScheduleEntry> entries);

  /// Uniform weights 1/M.
  static MixedUnitarySchedule uniform(std::size_t dim, const std::vector<UnitaryOp> &unitaries);
  /// Uniform schedule of Pauli strings, e.g. {"I", "X", "Y", "Z"}.
  static MixedUnitarySchedule from_paulis(const std::vector<std::string> &labels);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<ScheduleEntry> &entries() const { return entries_; }

 private:
  std::size_t dim_ = 0;
  std::vector<ScheduleEntry> entries_;
};

HermitianOp apply_channel(const MixedUnitarySchedule &sch, const HermitianOp &x);

struct AnnihilationResult {
  bool annihilated = false;
  /// ||eps(V_i)|| / ||V_i|| per basis element.
  std::vector<double> residuals;
  double max_residual = 0.0;
};

AnnihilationResult annihilates(const MixedUnitarySchedule &sch, const NoiseSpace &noise, double tol = 1e-10);

/// sum_{ij} eps(|i><j|) (x) |i><j|, a d^2 x d^2 positive semidefinite matrix.
Matrix choi_matrix(const MixedUnitarySchedule &sch);

/// Eigenvalues of the Choi matrix above tol * lambda_max.
int choi_rank(const MixedUnitarySchedule &sch, double tol = 1e-8);

/// A lower bound on schedule length M or on evolution time. `value` is an
/// integer count for coherent / projection kinds and a time otherwise;
/// `upper` is set only for interval-valued results.
struct BoundReport {
  std::string kind;
  double value = 0.0;
  std::optional<double> upper;
  nlohmann::json witness = nlohmann::json::object();
};

/// M >= q^2 for noise containing an su(q) block.
BoundReport coherent_bound(int q);
/// Full su(2^n) noise on n qubits: M >= 4^n.
BoundReport universal_coherent_bound(int n_qubits);

/// Pairwise orthogonal projectors resolving the identity.
class ProjectorFamily {
 public:
  ProjectorFamily() = default;
  ProjectorFamily(std::size_t dim, std::vector<HermitianOp> projectors, const Tolerances &tol = {});

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return projectors_.size(); }
  const std::vector<HermitianOp> &projectors() const { return projectors_; }
  const std::vector<int> &ranks() const { return ranks_; }

  /// Pi_s / r_s - Pi_S / r_S for s < S; spans the traceless part of the family.
  std::vector<HermitianOp> trace_zero_generators() const;

 private:
  std::size_t dim_ = 0;
  std::vector<HermitianOp> projectors_;
  std::vector<int> ranks_;
};

/// M >= max_s ceil(d / r_s).
BoundReport projection_bound(const ProjectorFamily &fam);

struct ProjectorCandidate {
  /// "rank-one", "eigenspaces", "zero-trace-blocks" or "trivial".
  std::string source;
  /// Which generic element (0, 1 or 2) produced the family.
  int draw = 0;
  ProjectorFamily family;
  /// Worst relative HS distance of a trace-zero generator from the noise space.
  double containment_residual = 0.0;
  bool certified = false;
  int bound = 1;
};

struct ProjectorSearch {
  std::vector<ProjectorCandidate> candidates;
  /// Index of the certified candidate with the largest bound.
  std::size_t best = 0;
  BoundReport bound;
};

/// Diagonalizes generic elements of the noise space (three draws derived
/// from `seed`), groups the spectrum into minimal zero-trace blocks by exact
/// subset-sum search and certifies candidate families by containment.
/// Refuses d > 16.
ProjectorSearch find_projectors(const NoiseSpace &noise, std::uint64_t seed);

/// Minimal zero-sum groups of `values` at absolute tolerance `tol`, taken
/// smallest first. Each group is a list of indices.
std::vector<std::vector<int>> zero_sum_blocks(const std::vector<double> &values, double tol);

/// Perimeter bound (1 / 2u) sum_m dist(y_m, y_{m+1}) on the cycle of toggled
/// noise operators y_m = U_m^dagger V U_m. With `search_order` and M <= 8 the
/// witness also carries the minimal-perimeter visiting order.
BoundReport schedule_time_bound(const MixedUnitarySchedule &sch, const HermitianOp &v, double u_max,
                                bool search_order = false);

/// T >= pi / u_max.
BoundReport single_noise_time_floor(double u_max);

/// T >= M pi / (4 u_max).
BoundReport simple_time_floor(std::size_t m, double u_max);

/// Largest principal angle between the +1 eigenspaces of two involutions.
double principal_angle(const HermitianOp &a, const HermitianOp &b);

}  // namespace robustctl
