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

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"

#include "oracles.hpp"

using namespace robustctl;
using robustctl::testing::random_hermitian;
using robustctl::testing::random_unitary;

namespace {

double dist(const Matrix &a, const Matrix &b) { return max_abs_entry(a - b); }

}  // namespace

TEST(linalg, hermitian_rejects_non_hermitian) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  EXPECT_THROW(HermitianOp{m}, ValidationError);
  EXPECT_THROW(HermitianOp{Matrix::Zero(2, 3)}, ValidationError);
}

TEST(linalg, unitary_rejects_non_unitary) {
  Matrix m = Matrix::Identity(2, 2) * 1.1;
  EXPECT_THROW(UnitaryOp{m}, ValidationError);
}

TEST(linalg, mat_exp_zero_time_is_identity) {
  std::mt19937_64 rng(1);
  auto a = random_hermitian(rng, 4, 3.0);
  EXPECT_LE(dist(mat_exp(a, 0.0).matrix(), Matrix::Identity(4, 4)), 1e-14);
}

TEST(linalg, mat_exp_half_period_pauli) {
  const auto x = pauli_string("X");
  const Complex minus_i(0.0, -1.0);
  EXPECT_LE(dist(mat_exp(x, std::numbers::pi / 2).matrix(), minus_i * x.matrix()), 1e-12);
}

TEST(linalg, mat_exp_matches_taylor_oracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = random_hermitian(rng, 4, 2.5);
    const Matrix want = robustctl::testing::taylor_exp(a.matrix(), 0.37);
    EXPECT_LE(dist(mat_exp(a, 0.37).matrix(), want), 1e-10);
  }
}

TEST(linalg, mat_exp_group_property) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_hermitian(rng, 3 + trial % 4, 2.0);
    const double s = 0.1 * trial, t = 0.77 - 0.03 * trial;
    EXPECT_LE(dist((mat_exp(a, s) * mat_exp(a, t)).matrix(), mat_exp(a, s + t).matrix()), 1e-10);
  }
}

TEST(linalg, adjoint_examples) {
  const auto z = pauli_string("Z");
  const auto x = pauli_string("X");
  EXPECT_LE(dist(adjoint(UnitaryOp::identity(2), z).matrix(), z.matrix()), 1e-15);
  EXPECT_LE(dist(adjoint(UnitaryOp(x.matrix()), z).matrix(), -z.matrix()), 1e-15);
  EXPECT_THROW(adjoint(UnitaryOp::identity(4), z), ValidationError);
}

TEST(linalg, adjoint_preserves_spectrum) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = 2 + trial % 6;
    auto a = random_hermitian(rng, d, 1.7);
    auto u = random_unitary(rng, d);
    const auto before = spectrum(a).values;
    const auto after = spectrum(adjoint(u, a)).values;
    EXPECT_LE((before - after).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(linalg, op_norm_examples) {
  EXPECT_NEAR(op_norm(pauli_string("Z")), 1.0, 1e-15);
  EXPECT_NEAR(op_norm(pauli_string("XX") * 3.0), 3.0, 1e-14);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = random_hermitian(rng, 5);
    a = a * (1.0 + trial);
    EXPECT_NEAR(op_norm(a), robustctl::testing::power_iteration_norm(a.matrix()), 1e-9 * (1.0 + trial));
  }
}

TEST(linalg, op_norm_uses_absolute_eigenvalue) {
  Matrix m = Matrix::Zero(3, 3);
  m(0, 0) = 0.5;
  m(1, 1) = 0.5;
  m(2, 2) = -1.0;
  EXPECT_DOUBLE_EQ(op_norm(HermitianOp(m)), 1.0);
}

TEST(linalg, hs_inner_examples) {
  EXPECT_DOUBLE_EQ(hs_inner(pauli_string("Z"), pauli_string("Z")), 1.0);
  EXPECT_DOUBLE_EQ(hs_inner(pauli_string("X"), pauli_string("Z")), 0.0);
  EXPECT_DOUBLE_EQ(hs_inner(pauli_string("XI"), pauli_string("XZ")), 0.0);
  EXPECT_THROW(hs_inner(pauli_string("X"), pauli_string("XX")), ValidationError);
}

TEST(linalg, hs_inner_equals_norm_squared_for_scaled_involutions) {
  std::mt19937_64 rng(9);
  const char letters[] = {'I', 'X', 'Y', 'Z'};
  for (int trial = 0; trial < 20; ++trial) {
    std::string label;
    for (int q = 0; q < 3; ++q) {
      label.push_back(letters[(rng() % 4)]);
    }
    const double c = 0.3 + trial;
    const auto p = pauli_string(label) * c;
    EXPECT_NEAR(hs_inner(p, p), op_norm(p) * op_norm(p), 1e-12 * c * c);
  }
  // Not an involution: the inner product is strictly below the norm squared.
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 1.0;
  EXPECT_LT(hs_inner(HermitianOp(m), HermitianOp(m)), 1.0);
  auto r = random_hermitian(rng, 4);
  EXPECT_GE(hs_inner(r, r), 0.0);
}

TEST(linalg, orthonormalize_drops_dependent_elements) {
  const auto b = OperatorBasis::orthonormalize(
      2, {pauli_string("X"), pauli_string("X") * 2.0, pauli_string("X") + pauli_string("Z")});
  ASSERT_EQ(b.size(), 2u);
  EXPECT_NEAR(hs_inner(b[0], b[1]), 0.0, 1e-15);
  EXPECT_NEAR(hs_inner(b[1], pauli_string("Z")), 1.0, 1e-14);
}

TEST(linalg, basis_rejects_non_orthonormal) {
  EXPECT_THROW(OperatorBasis(2, {pauli_string("X") * 2.0}), ValidationError);
  EXPECT_THROW(OperatorBasis(2, {HermitianOp::identity(2)}), ValidationError);
}

TEST(linalg, pauli_string_ordering) {
  // Leftmost letter is the most significant tensor factor.
  const auto zi = pauli_string("ZI");
  EXPECT_DOUBLE_EQ(zi(1, 1).real(), 1.0);
  EXPECT_DOUBLE_EQ(zi(2, 2).real(), -1.0);
  EXPECT_LE(dist(site_pauli('Z', 0, 2).matrix(), zi.matrix()), 0.0);
}
