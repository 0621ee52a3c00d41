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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "robustctl/schedules.hpp"

namespace robustctl {

namespace {

void require_positive_speed(double u_max, const char *ctx) {
  if (!(u_max > 0.0) || !std::isfinite(u_max)) {
    throw ValidationError(std::string(ctx) + ": u_max must be positive and finite");
  }
}

// Column basis of the +1 eigenspace of an involution.
Matrix plus_space(const HermitianOp &k) {
  const Spectrum s = spectrum(k);
  Eigen::Index first = 0;
  while (first < s.values.size() && s.values(first) <= 0.0) ++first;
  return s.vectors.rightCols(s.values.size() - first);
}

// Angle between involutions as points on the sphere of radius 1 in the
// normalized HS metric: arccos <a, b>, via the chord for conditioning.
double chord_angle(const HermitianOp &a, const HermitianOp &b) {
  const HermitianOp diff = a - b;
  const double chord = std::sqrt(std::max(0.0, hs_inner(diff, diff)));
  return 2.0 * std::asin(std::min(1.0, chord / 2.0));
}

}  // namespace

MixedUnitarySchedule::MixedUnitarySchedule(std::size_t dim, std::vector<ScheduleEntry> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim_ == 0) throw ValidationError("MixedUnitarySchedule: dimension must be positive");
  if (entries_.empty()) throw ValidationError("MixedUnitarySchedule: no entries");
  double total = 0.0;
  for (const auto &e : entries_) {
    if (!(e.p > 0.0) || !std::isfinite(e.p)) {
      throw ValidationError("MixedUnitarySchedule: probabilities must be positive");
    }
    require_same_dim(e.u.dim(), dim_, "MixedUnitarySchedule");
    total += e.p;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw ValidationError("MixedUnitarySchedule: probabilities sum to " + std::to_string(total));
  }
  const HermitianOp id = HermitianOp::identity(dim_);
  if (max_abs_entry((apply_channel(*this, id) - id).matrix()) > 1e-12) {
    throw ValidationError("MixedUnitarySchedule: channel is not unital");
  }
}

MixedUnitarySchedule MixedUnitarySchedule::uniform(std::size_t dim, const std::vector<UnitaryOp> &unitaries) {
  std::vector<ScheduleEntry> entries;
  const double p = 1.0 / static_cast<double>(unitaries.size());
  for (const auto &u : unitaries) entries.push_back({p, u});
  return MixedUnitarySchedule(dim, std::move(entries));
}

MixedUnitarySchedule MixedUnitarySchedule::from_paulis(const std::vector<std::string> &labels) {
  if (labels.empty()) throw ValidationError("MixedUnitarySchedule: no Pauli labels");
  std::vector<UnitaryOp> us;
  for (const auto &l : labels) us.emplace_back(pauli_string(l).matrix());
  return uniform(us.front().dim(), us);
}

HermitianOp apply_channel(const MixedUnitarySchedule &sch, const HermitianOp &x) {
  require_same_dim(sch.dim(), x.dim(), "apply_channel");
  Matrix acc = Matrix::Zero(static_cast<Eigen::Index>(sch.dim()), static_cast<Eigen::Index>(sch.dim()));
  for (const auto &e : sch.entries()) {
    acc += e.p * (e.u.matrix().adjoint() * x.matrix() * e.u.matrix());
  }
  return hermitian_part(acc);
}

AnnihilationResult annihilates(const MixedUnitarySchedule &sch, const NoiseSpace &noise, double tol) {
  require_same_dim(sch.dim(), noise.dim(), "annihilates");
  AnnihilationResult r;
  for (std::size_t i = 0; i < noise.size(); ++i) {
    const double res = op_norm(apply_channel(sch, noise[i])) / op_norm(noise[i]);
    r.residuals.push_back(res);
    r.max_residual = std::max(r.max_residual, res);
  }
  r.annihilated = r.max_residual <= tol;
  return r;
}

Matrix choi_matrix(const MixedUnitarySchedule &sch) {
  const auto d = static_cast<Eigen::Index>(sch.dim());
  Matrix c = Matrix::Zero(d * d, d * d);
  Vector k(d * d);
  for (const auto &e : sch.entries()) {
    // eps(|i><j|) = sum p (U^dag e_i)(U^dag e_j)^dag, so the Choi matrix is
    // sum p k k^dag with k[a d + i] = (U^dag)_{a i}.
    const Matrix w = e.u.matrix().adjoint();
    for (Eigen::Index a = 0; a < d; ++a) {
      for (Eigen::Index i = 0; i < d; ++i) k(a * d + i) = w(a, i);
    }
    c += e.p * (k * k.adjoint());
  }
  return c;
}

int choi_rank(const MixedUnitarySchedule &sch, double tol) {
  const Spectrum s = spectrum(hermitian_part(choi_matrix(sch)));
  const double top = s.values.maxCoeff();
  int rank = 0;
  for (Eigen::Index i = 0; i < s.values.size(); ++i) {
    if (s.values(i) > tol * top) ++rank;
  }
  return rank;
}

BoundReport coherent_bound(int q) {
  if (q < 2) throw ValidationError("coherent_bound: q must be at least 2");
  BoundReport r;
  r.kind = "coherent";
  r.value = static_cast<double>(q) * q;
  r.witness = {{"q", q}};
  return r;
}

BoundReport universal_coherent_bound(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 26) {
    throw ValidationError("universal_coherent_bound: qubit count must be in [1, 26]");
  }
  BoundReport r = coherent_bound(1 << n_qubits);
  r.witness["n_qubits"] = n_qubits;
  return r;
}

ProjectorFamily::ProjectorFamily(std::size_t dim, std::vector<HermitianOp> projectors, const Tolerances &tol)
    : dim_(dim), projectors_(std::move(projectors)) {
  if (dim_ == 0 || projectors_.empty()) throw ValidationError("ProjectorFamily: empty family");
  const auto d = static_cast<Eigen::Index>(dim_);
  Matrix sum = Matrix::Zero(d, d);
  int total_rank = 0;
  for (std::size_t s = 0; s < projectors_.size(); ++s) {
    const Matrix &p = projectors_[s].matrix();
    require_same_dim(projectors_[s].dim(), dim_, "ProjectorFamily");
    if (max_abs_entry(p * p - p) > tol.algebraic) {
      throw ValidationError("ProjectorFamily: element " + std::to_string(s) + " is not a projector");
    }
    for (std::size_t t = 0; t < s; ++t) {
      if (max_abs_entry(p * projectors_[t].matrix()) > tol.algebraic) {
        throw ValidationError("ProjectorFamily: projectors are not orthogonal");
      }
    }
    const double tr = projectors_[s].trace();
    const int r = static_cast<int>(std::lround(tr));
    if (r < 1 || std::abs(tr - r) > tol.algebraic) {
      throw ValidationError("ProjectorFamily: projector rank must be a positive integer");
    }
    ranks_.push_back(r);
    total_rank += r;
    sum += p;
  }
  if (max_abs_entry(sum - Matrix::Identity(d, d)) > tol.algebraic || total_rank != static_cast<int>(dim_)) {
    throw ValidationError("ProjectorFamily: projectors do not resolve the identity");
  }
}

std::vector<HermitianOp> ProjectorFamily::trace_zero_generators() const {
  std::vector<HermitianOp> out;
  const std::size_t last = projectors_.size() - 1;
  const HermitianOp tail = projectors_[last] * (1.0 / ranks_[last]);
  for (std::size_t s = 0; s < last; ++s) out.push_back(projectors_[s] * (1.0 / ranks_[s]) - tail);
  return out;
}

BoundReport projection_bound(const ProjectorFamily &fam) {
  BoundReport r;
  r.kind = "projection";
  const int d = static_cast<int>(fam.dim());
  std::size_t arg = 0;
  int best = 0;
  for (std::size_t s = 0; s < fam.size(); ++s) {
    const int b = (d + fam.ranks()[s] - 1) / fam.ranks()[s];
    if (b > best) {
      best = b;
      arg = s;
    }
  }
  r.value = best;
  r.witness = {{"ranks", fam.ranks()}, {"argmax", arg}, {"dim", d}};
  return r;
}

double principal_angle(const HermitianOp &a, const HermitianOp &b) {
  require_same_dim(a.dim(), b.dim(), "principal_angle");
  const Matrix qa = plus_space(a);
  const Matrix qb = plus_space(b);
  if (qa.cols() != qb.cols()) return std::numbers::pi / 2.0;
  if (qa.cols() == 0) return 0.0;
  const Eigen::JacobiSVD<Matrix> cs(qa.adjoint() * qb);
  const double c = std::clamp(cs.singularValues().minCoeff(), 0.0, 1.0);
  const Matrix rest = qa - qb * (qb.adjoint() * qa);
  const Eigen::JacobiSVD<Matrix> ss(rest);
  const double s = std::clamp(ss.singularValues()(0), 0.0, 1.0);
  // Use whichever of sin / cos is better conditioned.
  return s < 0.7 ? std::asin(s) : std::acos(c);
}

BoundReport schedule_time_bound(const MixedUnitarySchedule &sch, const HermitianOp &v, double u_max,
                                bool search_order) {
  require_same_dim(sch.dim(), v.dim(), "schedule_time_bound");
  require_positive_speed(u_max, "schedule_time_bound");
  if (!is_involution(v)) throw ValidationError("schedule_time_bound: V must satisfy V^2 = I");

  const std::size_t m = sch.size();
  std::vector<HermitianOp> y;
  for (const auto &e : sch.entries()) y.push_back(adjoint(e.u, v));

  std::vector<std::vector<double>> dist(m, std::vector<double>(m, 0.0));
  std::vector<std::vector<double>> pa(m, std::vector<double>(m, 0.0));
  std::vector<std::vector<double>> ca(m, std::vector<double>(m, 0.0));
  double max_inner = -1.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      pa[i][j] = pa[j][i] = principal_angle(y[i], y[j]);
      ca[i][j] = ca[j][i] = chord_angle(y[i], y[j]);
      dist[i][j] = dist[j][i] = std::max(pa[i][j], ca[i][j]);
      max_inner = std::max(max_inner, hs_inner(y[i], y[j]));
    }
  }

  BoundReport r;
  r.kind = "geodesic-time";
  nlohmann::json legs = nlohmann::json::array();
  double perimeter = 0.0;
  if (m > 1) {
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t j = (i + 1) % m;
      perimeter += dist[i][j];
      legs.push_back({{"from", i}, {"to", j}, {"principal_angle", pa[i][j]}, {"arccos_inner", ca[i][j]},
                      {"dist", dist[i][j]}});
    }
  }
  r.value = perimeter / (2.0 * u_max);
  r.witness = {{"legs", legs},
               {"simple_floor", simple_time_floor(m, u_max).value},
               {"separated", m < 2 || max_inner <= 1e-12},
               {"max_pair_inner", m < 2 ? 0.0 : max_inner}};

  if (search_order) {
    if (m > 8) {
      r.witness["best_order"] = nullptr;
      r.witness["best_order_note"] = "skipped for M > 8";
    } else if (m > 1) {
      std::vector<std::size_t> order(m);
      std::iota(order.begin(), order.end(), 0);
      std::vector<std::size_t> best_order = order;
      double best = perimeter;
      do {
        double per = 0.0;
        for (std::size_t i = 0; i < m; ++i) per += dist[order[i]][order[(i + 1) % m]];
        if (per < best - 1e-15) {
          best = per;
          best_order = order;
        }
      } while (std::next_permutation(order.begin() + 1, order.end()));
      r.witness["best_order"] = best_order;
      r.witness["best_order_value"] = best / (2.0 * u_max);
    }
  }
  return r;
}

BoundReport single_noise_time_floor(double u_max) {
  require_positive_speed(u_max, "single_noise_time_floor");
  BoundReport r;
  r.kind = "single-noise-time";
  r.value = std::numbers::pi / u_max;
  r.witness = {{"u_max", u_max}};
  return r;
}

BoundReport simple_time_floor(std::size_t m, double u_max) {
  require_positive_speed(u_max, "simple_time_floor");
  BoundReport r;
  r.kind = "simple-time";
  r.value = static_cast<double>(m) * std::numbers::pi / (4.0 * u_max);
  r.witness = {{"M", m}, {"u_max", u_max}};
  return r;
}

}  // namespace robustctl
