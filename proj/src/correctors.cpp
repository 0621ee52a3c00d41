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
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/SVD>

#include "robustctl/robustify.hpp"

namespace robustctl {

namespace {

double spectral_norm(const Matrix &m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

void require_involution(const HermitianOp &k, const Tolerances &tol, const char *ctx) {
  if (!is_involution(k, tol)) {
    throw ValidationError(std::string(ctx) + ": operator is not an involution");
  }
}

// Rank-one involution for Y = u v^dagger with unit u, v; the square roots
// reduce to complementary projectors.
Matrix rank_one_halmos(const Vector &u, const Vector &v) {
  const Eigen::Index h = u.size();
  Matrix k(2 * h, 2 * h);
  const Matrix id = Matrix::Identity(h, h);
  k.topLeftCorner(h, h) = id - u * u.adjoint();
  k.topRightCorner(h, h) = u * v.adjoint();
  k.bottomLeftCorner(h, h) = v * u.adjoint();
  k.bottomRightCorner(h, h) = -(id - v * v.adjoint());
  return k;
}

}  // namespace

CorrectorSpan corrector_span(const HermitianOp &k, const HermitianOp &v, const Tolerances &tol) {
  require_same_dim(k.dim(), v.dim(), "corrector_span");
  require_involution(k, tol, "corrector_span");
  CorrectorSpan s{v, sandwich(k, v), i_commutator(k, v), 0};
  const std::array<const HermitianOp *, 3> ops{&s.v, &s.kvk, &s.commutator};
  Eigen::Matrix3d gram;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) gram(i, j) = hs_inner(*ops[i], *ops[j]);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(gram);
  const double top = es.eigenvalues().maxCoeff();
  for (int i = 0; i < 3; ++i) {
    if (top > 0.0 && es.eigenvalues()(i) > tol.rank * top) ++s.dimension;
  }
  return s;
}

std::optional<SpanCoefficients> single_corrector_coefficients(const HermitianOp &e, const HermitianOp &k,
                                                              const HermitianOp &v, const UnitaryOp &u_t,
                                                              const Tolerances &tol) {
  require_same_dim(e.dim(), v.dim(), "single_corrector_coefficients");
  require_same_dim(e.dim(), u_t.dim(), "single_corrector_coefficients");
  const CorrectorSpan span = corrector_span(k, v, tol);
  const HermitianOp target = adjoint(u_t.dagger(), e);
  const double e_norm = op_norm(e);

  // Ordered Gram-Schmidt; a direction is kept only if it adds something new.
  const std::array<const HermitianOp *, 3> dirs{&span.v, &span.kvk, &span.commutator};
  std::vector<int> kept;
  std::vector<HermitianOp> ortho;
  for (int i = 0; i < 3; ++i) {
    HermitianOp r = *dirs[i];
    for (const auto &q : ortho) r = r - q * hs_inner(q, r);
    const double n2 = hs_inner(r, r);
    const double base = hs_inner(*dirs[i], *dirs[i]);
    if (base > 0.0 && n2 > tol.rank * base) {
      kept.push_back(i);
      ortho.push_back(r * (1.0 / std::sqrt(n2)));
    }
  }

  SpanCoefficients out;
  if (!kept.empty()) {
    const auto n = static_cast<Eigen::Index>(kept.size());
    Eigen::MatrixXd g(n, n);
    Eigen::VectorXd rhs(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      rhs(i) = hs_inner(*dirs[kept[i]], target);
      for (Eigen::Index j = 0; j < n; ++j) g(i, j) = hs_inner(*dirs[kept[i]], *dirs[kept[j]]);
    }
    const Eigen::VectorXd x = g.colPivHouseholderQr().solve(rhs);
    std::array<double, 3> c{0.0, 0.0, 0.0};
    for (Eigen::Index i = 0; i < n; ++i) c[kept[i]] = x(i);
    out.a = c[0];
    out.b = c[1];
    out.c = c[2];
  }
  out.residual = op_norm(target - span.v * out.a - span.kvk * out.b - span.commutator * out.c);
  if (out.residual > 1e-9 * e_norm && out.residual > 1e-14) return std::nullopt;
  return out;
}

int corrector_count_floor(int dim_w) {
  if (dim_w < 0) throw ValidationError("corrector_count_floor: negative dimension");
  return (dim_w + 2) / 2;
}

HermitianOp halmos_involution(const Matrix &y) {
  if (y.rows() != y.cols() || y.rows() == 0) {
    throw ValidationError("halmos_involution: Y must be square and non-empty");
  }
  const Eigen::Index h = y.rows();
  Eigen::JacobiSVD<Matrix> svd(y, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const RealVector sigma = svd.singularValues();
  if (sigma(0) > 1.0 + 1e-12) {
    throw ValidationError("halmos_involution: Y is not a contraction");
  }
  RealVector c(h);
  for (Eigen::Index i = 0; i < h; ++i) {
    const double s = std::min(sigma(i), 1.0);
    c(i) = std::sqrt(std::max(0.0, 1.0 - s * s));
  }
  const Matrix &lu = svd.matrixU();
  const Matrix &rv = svd.matrixV();
  Matrix k(2 * h, 2 * h);
  k.topLeftCorner(h, h) = lu * c.cast<Complex>().asDiagonal() * lu.adjoint();
  k.topRightCorner(h, h) = y;
  k.bottomLeftCorner(h, h) = y.adjoint();
  k.bottomRightCorner(h, h) = -(rv * c.cast<Complex>().asDiagonal() * rv.adjoint());
  return hermitian_part(k);
}

std::size_t CorrectorPlan::axis_count() const {
  return 1 + (off_diagonal_axis ? 1 : 0) + diagonal_axes.size();
}

HermitianOp CorrectorPlan::reconstruct() const {
  HermitianOp out = v * alpha;
  if (off_diagonal_axis) out += i_commutator(*off_diagonal_axis, v) * gamma1;
  for (const auto &ax : diagonal_axes) out += sandwich(ax.k, v) * ax.beta;
  return out;
}

CorrectorPlan synthesize_correctors(const HermitianOp &e, const HermitianOp &v, const CorrectorOptions &opts,
                                    const Tolerances &tol) {
  require_same_dim(e.dim(), v.dim(), "synthesize_correctors");
  require_involution(v, tol, "synthesize_correctors");
  if (!e.is_traceless(tol)) {
    throw ValidationError("synthesize_correctors: E must be traceless");
  }
  const auto d = static_cast<Eigen::Index>(v.dim());
  const Spectrum sv = spectrum(v);
  Eigen::Index plus = 0;
  for (Eigen::Index i = 0; i < d; ++i) {
    if (sv.values(i) > 0.0) ++plus;
  }
  if (2 * plus != d) {
    throw UnsupportedError("synthesize_correctors: V must have equal +1 and -1 multiplicities (got " +
                           std::to_string(plus) + " of " + std::to_string(d) + ")");
  }
  const Eigen::Index h = plus;

  CorrectorPlan plan;
  plan.v = v;
  plan.target = e;
  plan.v_basis.resize(d, d);
  plan.v_basis.leftCols(h) = sv.vectors.rightCols(h);
  plan.v_basis.rightCols(h) = sv.vectors.leftCols(h);
  const Matrix &w = plan.v_basis;

  const double e_norm = op_norm(e);
  if (e_norm == 0.0) {
    plan.shift = opts.shift.value_or(0.0);
    plan.alpha = 0.0;
    plan.residual = 0.0;
    return plan;
  }

  const Matrix et = w.adjoint() * e.matrix() * w;
  const Matrix a = et.topLeftCorner(h, h);
  const Matrix b = et.topRightCorner(h, h);
  const Matrix dm = et.bottomRightCorner(h, h);

  // Off-diagonal block.
  const double b_norm = spectral_norm(b);
  if (b_norm > 1e-14 * e_norm) {
    plan.gamma1 = opts.gamma1.value_or(std::max(b_norm, e_norm));
    if (!(std::abs(plan.gamma1) * 2.0 >= b_norm * (1.0 - 1e-12))) {
      throw ValidationError("synthesize_correctors: gamma1 must satisfy |gamma1| >= ||B|| / 2");
    }
    const Matrix y1 = (Complex(0.0, 1.0) / (2.0 * plan.gamma1)) * b;
    const HermitianOp k_local = halmos_involution(y1);
    plan.off_diagonal_axis = hermitian_part(w * k_local.matrix() * w.adjoint());
  }

  // Diagonal blocks: A' = (sI - A)/2 and D' = (sI + D)/2 have equal traces.
  const double s = opts.shift.value_or(e_norm);
  plan.shift = s;
  const Matrix id = Matrix::Identity(h, h);
  const Spectrum sa = spectrum(hermitian_part((s * id - a) * 0.5));
  const Spectrum sd = spectrum(hermitian_part((s * id + dm) * 0.5));
  const double psd_slack = 1e-12 * std::max(1.0, std::abs(s));
  if (sa.values.minCoeff() < -psd_slack || sd.values.minCoeff() < -psd_slack) {
    throw ConstructionError("synthesize_correctors: shifted diagonal blocks are not positive semidefinite",
                            std::min(sa.values.minCoeff(), sd.values.minCoeff()), 0.0);
  }
  const RealVector wa = sa.values.cwiseMax(0.0);
  const RealVector wd = sd.values.cwiseMax(0.0);
  const double total = std::max(wa.sum(), wd.sum());
  const double eps = 1e-14 * std::max(total, 1e-300);

  // Common refinement of the two weight sequences.
  Eigen::Index i = 0, j = 0;
  double ra = h > 0 ? wa(0) : 0.0;
  double rd = h > 0 ? wd(0) : 0.0;
  while (i < h && j < h) {
    if (ra <= eps) {
      if (++i < h) ra = wa(i);
      continue;
    }
    if (rd <= eps) {
      if (++j < h) rd = wd(j);
      continue;
    }
    const double weight = std::min(ra, rd);
    const Matrix k_local = rank_one_halmos(sa.vectors.col(i), sd.vectors.col(j));
    plan.diagonal_axes.push_back({hermitian_part(w * k_local * w.adjoint()), weight});
    ra -= weight;
    rd -= weight;
  }

  double beta_sum = 0.0;
  for (const auto &ax : plan.diagonal_axes) beta_sum += ax.beta;
  plan.alpha = s - beta_sum;

  plan.residual = op_norm(plan.reconstruct() - e);
  double worst_involution = 0.0;
  if (plan.off_diagonal_axis) {
    const Matrix &k = plan.off_diagonal_axis->matrix();
    worst_involution = max_abs_entry(k * k - Matrix::Identity(d, d));
  }
  for (const auto &ax : plan.diagonal_axes) {
    worst_involution = std::max(worst_involution, max_abs_entry(ax.k.matrix() * ax.k.matrix() - Matrix::Identity(d, d)));
  }
  if (plan.residual > 1e-8 * e_norm || worst_involution > tol.algebraic ||
      plan.axis_count() > static_cast<std::size_t>(d + 1)) {
    throw ConstructionError("synthesize_correctors: verification failed (residual " +
                                std::to_string(plan.residual) + ")",
                            plan.residual, worst_involution);
  }
  return plan;
}

std::optional<std::vector<Dwell>> dwells_for_coefficients(double alpha, double beta, double gamma, double tol) {
  const double scale = std::max({1.0, std::abs(alpha), std::abs(beta), std::abs(gamma)});
  const double slack = tol * scale;
  if (alpha < -slack || beta < -slack || alpha * beta - gamma * gamma < -slack * scale) {
    return std::nullopt;
  }
  Eigen::Matrix2d m;
  m << alpha, gamma, gamma, beta;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(m);
  std::vector<Dwell> out;
  for (int k = 0; k < 2; ++k) {
    const double mu = es.eigenvalues()(k);
    if (mu <= slack) continue;
    const double c = es.eigenvectors()(0, k);
    const double sn = es.eigenvectors()(1, k);
    out.push_back({std::atan2(sn, c), mu});
  }
  return out;
}

std::optional<std::vector<AxisDwells>> realize_plan(const CorrectorPlan &plan) {
  if (plan.off_diagonal_axis && plan.gamma1 != 0.0) return std::nullopt;
  if (plan.alpha < 0.0) return std::nullopt;
  std::vector<AxisDwells> out;
  if (plan.alpha > 0.0) out.push_back({plan.v, {{0.0, plan.alpha}}});
  for (const auto &ax : plan.diagonal_axes) {
    if (ax.beta > 0.0) out.push_back({ax.k, {{std::numbers::pi / 2.0, ax.beta}}});
  }
  return out;
}

HermitianOp dwell_contribution(const std::vector<AxisDwells> &dwells, const HermitianOp &v) {
  HermitianOp out = HermitianOp::zero(v.dim());
  for (const auto &ax : dwells) {
    require_same_dim(ax.axis.dim(), v.dim(), "dwell_contribution");
    for (const auto &dw : ax.dwells) out += adjoint(mat_exp(ax.axis, dw.angle), v) * dw.duration;
  }
  return out;
}

}  // namespace robustctl
