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

#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "robustctl/errors.hpp"

namespace robustctl {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Every numerical threshold used by the library lives here so that rank
/// decisions and annihilation checks share the same numbers.
struct Tolerances {
  /// Max-entry deviation from Hermiticity, relative to max(1, largest entry).
  double hermitian = 1e-12;
  /// Max-entry deviation of U U^dagger from the identity.
  double unitary = 1e-10;
  /// Algebraic identities (involutions, orthonormality, unitality, ...).
  double algebraic = 1e-10;
  /// Eigenvalues below rank * lambda_max count as zero.
  double rank = 1e-8;
  /// |lambda_j - lambda_l| * duration below this uses the degenerate limit.
  double degenerate_gap = 1e-8;
  /// Normalization slack for state vectors.
  double state_norm = 1e-10;
};

/// Dense Hermitian d x d operator. Construction validates Hermiticity and
/// stores the exactly symmetrized matrix.
class HermitianOp {
 public:
  HermitianOp() = default;
  explicit HermitianOp(Matrix m, const Tolerances &tol = {});

  static HermitianOp zero(std::size_t dim);
  static HermitianOp identity(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const Matrix &matrix() const { return m_; }
  Complex operator()(Eigen::Index r, Eigen::Index c) const { return m_(r, c); }

  double trace() const;
  bool is_traceless(const Tolerances &tol = {}) const;

  HermitianOp operator+(const HermitianOp &o) const;
  HermitianOp operator-(const HermitianOp &o) const;
  HermitianOp operator-() const;
  HermitianOp operator*(double s) const;
  friend HermitianOp operator*(double s, const HermitianOp &a) { return a * s; }
  HermitianOp &operator+=(const HermitianOp &o);

 private:
  struct Trusted {};
  HermitianOp(Matrix m, Trusted) : m_(std::move(m)) {}
  friend HermitianOp hermitian_part(const Matrix &m);

  Matrix m_;
};

/// (M + M^dagger) / 2 without any validation.
HermitianOp hermitian_part(const Matrix &m);

/// Dense unitary d x d operator.
class UnitaryOp {
 public:
  UnitaryOp() = default;
  explicit UnitaryOp(Matrix m, const Tolerances &tol = {});

  static UnitaryOp identity(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const Matrix &matrix() const { return m_; }

  UnitaryOp dagger() const;
  /// Composition; (a * b) applies b first.
  UnitaryOp operator*(const UnitaryOp &o) const;

 private:
  struct Trusted {};
  UnitaryOp(Matrix m, Trusted) : m_(std::move(m)) {}
  friend UnitaryOp mat_exp(const HermitianOp &a, double t);

  Matrix m_;
};

/// Traceless Hermitian operators, orthonormal under <A,B> = Tr(AB)/d.
class OperatorBasis {
 public:
  OperatorBasis() = default;
  /// Validates tracelessness and orthonormality of the given elements.
  OperatorBasis(std::size_t dim, std::vector<HermitianOp> elements, const Tolerances &tol = {});

  /// Gram-Schmidt over the real span of the inputs; dependent inputs are dropped.
  static OperatorBasis orthonormalize(std::size_t dim, const std::vector<HermitianOp> &ops,
                                      const Tolerances &tol = {});

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const HermitianOp &operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<HermitianOp> &elements() const { return elements_; }

  /// Orthogonal projection onto the real span of the basis.
  HermitianOp project(const HermitianOp &x) const;

 private:
  std::size_t dim_ = 0;
  std::vector<HermitianOp> elements_;
};

/// Eigen-decomposition of a Hermitian operator, ascending eigenvalues.
struct Spectrum {
  RealVector values;
  Matrix vectors;
};
Spectrum spectrum(const HermitianOp &a);

/// exp(-i A t) through the eigen-decomposition of A.
UnitaryOp mat_exp(const HermitianOp &a, double t);

/// Toggling-frame adjoint U^dagger A U.
HermitianOp adjoint(const UnitaryOp &u, const HermitianOp &a);

/// Largest absolute eigenvalue.
double op_norm(const HermitianOp &a);

/// Normalized Hilbert-Schmidt product Tr(AB)/d.
double hs_inner(const HermitianOp &a, const HermitianOp &b);

/// i[A, B], which is Hermitian whenever A and B are.
HermitianOp i_commutator(const HermitianOp &a, const HermitianOp &b);

/// K A K for Hermitian K (used with involutions).
HermitianOp sandwich(const HermitianOp &k, const HermitianOp &a);

bool is_involution(const HermitianOp &k, const Tolerances &tol = {});

double max_abs_entry(const Matrix &m);

Matrix kron(const Matrix &a, const Matrix &b);

/// Pauli string such as "XZI"; the leftmost letter acts on the most
/// significant tensor factor (qubit 1).
HermitianOp pauli_string(std::string_view label);

/// Single-site Pauli `p` on qubit `site` (0-based, leftmost factor) of `n_qubits`.
HermitianOp site_pauli(char p, std::size_t site, std::size_t n_qubits);

/// |Tr(A^dagger B)| / d, insensitive to a global phase.
double phase_overlap(const UnitaryOp &a, const UnitaryOp &b);

/// 1 - |Tr(target^dagger actual)|^2 / d^2, evaluated from the eigenphases of
/// target^dagger actual so that tiny infidelities keep full relative precision.
double gate_infidelity(const UnitaryOp &target, const UnitaryOp &actual);

void require_same_dim(std::size_t a, std::size_t b, const char *context);

}  // namespace robustctl
