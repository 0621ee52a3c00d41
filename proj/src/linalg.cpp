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

#include "robustctl/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

namespace robustctl {

double max_abs_entry(const Matrix &m) {
  double best = 0.0;
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      best = std::max(best, std::abs(m(r, c)));
    }
  }
  return best;
}

void require_same_dim(std::size_t a, std::size_t b, const char *context) {
  if (a != b) {
    throw ValidationError(std::string(context) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                          std::to_string(b) + ")");
  }
}

HermitianOp::HermitianOp(Matrix m, const Tolerances &tol) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw ValidationError("HermitianOp: matrix must be square and non-empty");
  }
  const double scale = std::max(1.0, max_abs_entry(m));
  const double dev = max_abs_entry(m - m.adjoint());
  if (!(dev <= tol.hermitian * scale)) {
    throw ValidationError("HermitianOp: matrix is not Hermitian (deviation " + std::to_string(dev) + ")");
  }
  m_ = (m + m.adjoint()) * 0.5;
}

HermitianOp hermitian_part(const Matrix &m) {
  return HermitianOp(Matrix((m + m.adjoint()) * 0.5), HermitianOp::Trusted{});
}

HermitianOp HermitianOp::zero(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return HermitianOp(Matrix::Zero(d, d), Trusted{});
}

HermitianOp HermitianOp::identity(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return HermitianOp(Matrix::Identity(d, d), Trusted{});
}

double HermitianOp::trace() const { return m_.trace().real(); }

bool HermitianOp::is_traceless(const Tolerances &tol) const {
  return std::abs(trace()) <= tol.hermitian * static_cast<double>(dim()) * std::max(1.0, max_abs_entry(m_));
}

HermitianOp HermitianOp::operator+(const HermitianOp &o) const {
  require_same_dim(dim(), o.dim(), "HermitianOp::operator+");
  return HermitianOp(Matrix(m_ + o.m_), Trusted{});
}

HermitianOp HermitianOp::operator-(const HermitianOp &o) const {
  require_same_dim(dim(), o.dim(), "HermitianOp::operator-");
  return HermitianOp(Matrix(m_ - o.m_), Trusted{});
}

HermitianOp HermitianOp::operator-() const { return HermitianOp(Matrix(-m_), Trusted{}); }

HermitianOp HermitianOp::operator*(double s) const { return HermitianOp(Matrix(m_ * s), Trusted{}); }

HermitianOp &HermitianOp::operator+=(const HermitianOp &o) {
  require_same_dim(dim(), o.dim(), "HermitianOp::operator+=");
  m_ += o.m_;
  return *this;
}

UnitaryOp::UnitaryOp(Matrix m, const Tolerances &tol) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw ValidationError("UnitaryOp: matrix must be square and non-empty");
  }
  const double dev = max_abs_entry(m * m.adjoint() - Matrix::Identity(m.rows(), m.cols()));
  if (!(dev <= tol.unitary)) {
    throw ValidationError("UnitaryOp: matrix is not unitary (deviation " + std::to_string(dev) + ")");
  }
  m_ = std::move(m);
}

UnitaryOp UnitaryOp::identity(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return UnitaryOp(Matrix::Identity(d, d), Trusted{});
}

UnitaryOp UnitaryOp::dagger() const { return UnitaryOp(Matrix(m_.adjoint()), Trusted{}); }

UnitaryOp UnitaryOp::operator*(const UnitaryOp &o) const {
  require_same_dim(dim(), o.dim(), "UnitaryOp::operator*");
  return UnitaryOp(Matrix(m_ * o.m_), Trusted{});
}

OperatorBasis::OperatorBasis(std::size_t dim, std::vector<HermitianOp> elements, const Tolerances &tol)
    : dim_(dim), elements_(std::move(elements)) {
  if (dim_ == 0) {
    throw ValidationError("OperatorBasis: dimension must be positive");
  }
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    require_same_dim(dim_, elements_[i].dim(), "OperatorBasis");
    if (!elements_[i].is_traceless(tol)) {
      throw ValidationError("OperatorBasis: element " + std::to_string(i) + " is not traceless");
    }
    for (std::size_t j = 0; j <= i; ++j) {
      const double g = hs_inner(elements_[i], elements_[j]);
      const double want = i == j ? 1.0 : 0.0;
      if (std::abs(g - want) > tol.algebraic) {
        throw ValidationError("OperatorBasis: Gram matrix deviates from identity at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
      }
    }
  }
}

OperatorBasis OperatorBasis::orthonormalize(std::size_t dim, const std::vector<HermitianOp> &ops,
                                            const Tolerances &tol) {
  std::vector<HermitianOp> out;
  for (const auto &op : ops) {
    require_same_dim(dim, op.dim(), "OperatorBasis::orthonormalize");
    const double scale = std::sqrt(std::max(hs_inner(op, op), 0.0));
    if (scale == 0.0) {
      continue;
    }
    HermitianOp v = op;
    // Two Gram-Schmidt passes keep the result orthonormal to ~1e-15.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto &e : out) {
        v = v - e * hs_inner(e, v);
      }
    }
    const double n = std::sqrt(std::max(hs_inner(v, v), 0.0));
    if (n <= tol.rank * scale) {
      continue;
    }
    out.push_back(v * (1.0 / n));
  }
  return OperatorBasis(dim, std::move(out), tol);
}

HermitianOp OperatorBasis::project(const HermitianOp &x) const {
  require_same_dim(dim_, x.dim(), "OperatorBasis::project");
  HermitianOp acc = HermitianOp::zero(dim_);
  for (const auto &e : elements_) {
    acc += e * hs_inner(e, x);
  }
  return acc;
}

Spectrum spectrum(const HermitianOp &a) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a.matrix());
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("spectrum: eigen-decomposition did not converge");
  }
  return Spectrum{solver.eigenvalues(), solver.eigenvectors()};
}

UnitaryOp mat_exp(const HermitianOp &a, double t) {
  const auto sp = spectrum(a);
  const auto d = static_cast<Eigen::Index>(a.dim());
  Vector phases(d);
  for (Eigen::Index k = 0; k < d; ++k) {
    phases(k) = std::polar(1.0, -sp.values(k) * t);
  }
  Matrix u = sp.vectors * phases.asDiagonal() * sp.vectors.adjoint();
  return UnitaryOp(std::move(u), UnitaryOp::Trusted{});
}

HermitianOp adjoint(const UnitaryOp &u, const HermitianOp &a) {
  require_same_dim(u.dim(), a.dim(), "adjoint");
  return hermitian_part(u.matrix().adjoint() * a.matrix() * u.matrix());
}

double op_norm(const HermitianOp &a) {
  const auto sp = spectrum(a);
  return std::max(std::abs(sp.values.minCoeff()), std::abs(sp.values.maxCoeff()));
}

double hs_inner(const HermitianOp &a, const HermitianOp &b) {
  require_same_dim(a.dim(), b.dim(), "hs_inner");
  // Tr(AB) = sum_ij A_ij B_ji = sum_ij A_ij conj(B_ij) for Hermitian B.
  return a.matrix().cwiseProduct(b.matrix().conjugate()).sum().real() / static_cast<double>(a.dim());
}

HermitianOp i_commutator(const HermitianOp &a, const HermitianOp &b) {
  require_same_dim(a.dim(), b.dim(), "i_commutator");
  const Complex i(0.0, 1.0);
  return hermitian_part(i * (a.matrix() * b.matrix() - b.matrix() * a.matrix()));
}

HermitianOp sandwich(const HermitianOp &k, const HermitianOp &a) {
  require_same_dim(k.dim(), a.dim(), "sandwich");
  return hermitian_part(k.matrix() * a.matrix() * k.matrix());
}

bool is_involution(const HermitianOp &k, const Tolerances &tol) {
  const auto d = static_cast<Eigen::Index>(k.dim());
  return max_abs_entry(k.matrix() * k.matrix() - Matrix::Identity(d, d)) <= tol.algebraic;
}

double phase_overlap(const UnitaryOp &a, const UnitaryOp &b) {
  require_same_dim(a.dim(), b.dim(), "phase_overlap");
  return std::abs((a.matrix().adjoint() * b.matrix()).trace()) / static_cast<double>(a.dim());
}

double gate_infidelity(const UnitaryOp &target, const UnitaryOp &actual) {
  require_same_dim(target.dim(), actual.dim(), "gate_infidelity");
  const Matrix w = target.matrix().adjoint() * actual.matrix();
  Eigen::ComplexEigenSolver<Matrix> solver(w);
  const Vector &ev = solver.eigenvalues();
  // 1 - |sum_j e^{i p_j}|^2 / d^2 = (2 / d^2) sum_{j,l} sin^2((p_j - p_l) / 2)
  double acc = 0.0;
  for (Eigen::Index j = 0; j < ev.size(); ++j) {
    for (Eigen::Index l = 0; l < ev.size(); ++l) {
      const double s = std::sin(0.5 * std::arg(ev(j) / ev(l)));
      acc += s * s;
    }
  }
  const double d = static_cast<double>(target.dim());
  return 2.0 * acc / (d * d);
}

Matrix kron(const Matrix &a, const Matrix &b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

namespace {

Matrix single_pauli(char p) {
  Matrix m = Matrix::Zero(2, 2);
  switch (p) {
    case 'I':
      m(0, 0) = 1.0;
      m(1, 1) = 1.0;
      break;
    case 'X':
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case 'Y':
      m(0, 1) = Complex(0.0, -1.0);
      m(1, 0) = Complex(0.0, 1.0);
      break;
    case 'Z':
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
    default:
      throw ValidationError(std::string("pauli_string: unknown letter '") + p + "'");
  }
  return m;
}

}  // namespace

HermitianOp pauli_string(std::string_view label) {
  if (label.empty()) {
    throw ValidationError("pauli_string: empty label");
  }
  Matrix acc = single_pauli(label[0]);
  for (std::size_t k = 1; k < label.size(); ++k) {
    acc = kron(acc, single_pauli(label[k]));
  }
  return hermitian_part(acc);
}

HermitianOp site_pauli(char p, std::size_t site, std::size_t n_qubits) {
  if (site >= n_qubits) {
    throw ValidationError("site_pauli: site out of range");
  }
  std::string label(n_qubits, 'I');
  label[site] = p;
  return pauli_string(label);
}

}  // namespace robustctl
