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

#include "robustctl/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"

#include "oracles.hpp"

using namespace robustctl;
using std::numbers::pi;

namespace {

double dist(const Matrix &a, const Matrix &b) { return max_abs_entry(a - b); }

PulseSchedule single(const HermitianOp &h, double t, double u_max) { return PulseSchedule(h.dim(), u_max, {{h, t}}); }

Vector ket0() {
  Vector v = Vector::Zero(2);
  v(0) = 1.0;
  return v;
}

}  // namespace

TEST(dynamics, schedule_validation) {
  const auto x = pauli_string("X");
  EXPECT_THROW(single(x * 2.0, 1.0, 1.0), ValidationError);
  EXPECT_THROW(single(x, 0.0, 1.0), ValidationError);
  EXPECT_THROW(single(x, 1.0, -1.0), ValidationError);
  EXPECT_THROW(PulseSchedule(2, 1.0, {}), ValidationError);
  EXPECT_THROW(PulseSchedule(4, 1.0, {{x, 1.0}}), ValidationError);
  EXPECT_NO_THROW(single(x, 1.0, 1.0));
}

TEST(dynamics, propagator_examples) {
  EXPECT_LE(dist(propagator(single(HermitianOp::zero(2), 3.0, 1.0)).matrix(), Matrix::Identity(2, 2)), 1e-15);
  const double u = 2.5;
  EXPECT_LE(dist(propagator(single(pauli_string("X") * u, pi / u, u)).matrix(), -Matrix::Identity(2, 2)), 1e-12);
}

TEST(dynamics, propagator_matches_product_integrator) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 5; ++trial) {
    const auto s = robustctl::testing::random_schedule(rng, 2 + trial % 3, 2, 1.3);
    EXPECT_LE(dist(propagator(s).matrix(), robustctl::testing::product_integrator(s, 10000)), 1e-8);
  }
}

TEST(dynamics, propagator_at_endpoints) {
  std::mt19937_64 rng(2);
  const auto s = robustctl::testing::random_schedule(rng, 3, 3, 1.0);
  EXPECT_LE(dist(propagator_at(s, 0.0).matrix(), Matrix::Identity(3, 3)), 1e-15);
  EXPECT_LE(dist(propagator_at(s, s.total_duration()).matrix(), propagator(s).matrix()), 1e-13);
  const double t1 = s.segments()[0].duration;
  EXPECT_LE(dist(propagator_at(s, t1).matrix(), mat_exp(s.segments()[0].generator, t1).matrix()), 1e-13);
}

TEST(dynamics, frozen_frame_error) {
  const auto v = pauli_string("Z") * 0.7 + pauli_string("X") * 0.2;
  const auto e = first_order_error(single(HermitianOp::zero(2), 2.5, 1.0), v);
  EXPECT_LE(dist(e.matrix(), (v * 2.5).matrix()), 1e-14);
}

TEST(dynamics, great_circle_error_vanishes) {
  for (double u : {0.5, 1.0, 3.0}) {
    const auto e = first_order_error(single(pauli_string("X") * u, pi / u, u), pauli_string("Z"));
    EXPECT_LE(op_norm(e), 1e-12);
  }
}

TEST(dynamics, error_matches_quadrature) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 3; ++trial) {
    const std::size_t d = 2 + trial;
    const auto s = robustctl::testing::random_schedule(rng, d, 3, 1.0);
    const auto v = robustctl::testing::random_traceless(rng, d);
    const Matrix want = robustctl::testing::quadrature_error(s, v.matrix(), 100001);
    EXPECT_LE(dist(first_order_error(s, v).matrix(), want), 1e-8);
  }
}

TEST(dynamics, degenerate_generator_uses_linear_limit) {
  // H = diag(1, 1, -1): the (0,1) block is degenerate and must integrate linearly.
  Matrix h = Matrix::Zero(3, 3);
  h(0, 0) = 1.0;
  h(1, 1) = 1.0;
  h(2, 2) = -1.0;
  const auto s = single(HermitianOp(h), 1.3, 1.0);
  std::mt19937_64 rng(4);
  const auto v = robustctl::testing::random_traceless(rng, 3);
  const Matrix want = robustctl::testing::quadrature_error(s, v.matrix(), 100001);
  EXPECT_LE(dist(first_order_error(s, v).matrix(), want), 1e-9);
}

TEST(dynamics, error_norm_bounded_by_duration) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t d = 2 + trial % 4;
    const auto s = robustctl::testing::random_schedule(rng, d, 1 + trial % 5, 2.0);
    const auto v = robustctl::testing::random_traceless(rng, d);
    EXPECT_LE(op_norm(first_order_error(s, v)), s.total_duration() * op_norm(v) * (1 + 1e-12));
  }
}

TEST(dynamics, concatenation_rule) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t d = 2 + trial % 3;
    const auto s1 = robustctl::testing::random_schedule(rng, d, 2, 1.0);
    const auto s2 = robustctl::testing::random_schedule(rng, d, 3, 1.0);
    const auto v = robustctl::testing::random_traceless(rng, d);
    const auto whole = first_order_error(concatenate(s1, s2), v);
    const auto parts = first_order_error(s1, v) + adjoint(propagator(s1), first_order_error(s2, v));
    EXPECT_LE(dist(whole.matrix(), parts.matrix()), 1e-10);
  }
}

TEST(dynamics, reversed_path_mirrors_first_half) {
  // Reversed order with negated generators retraces U(t) back to I, so the
  // second half's toggled integrand equals the first half's in reverse.
  std::mt19937_64 rng(17);
  const auto s = robustctl::testing::random_schedule(rng, 2, 3, 1.0);
  std::vector<ControlSegment> back;
  for (auto it = s.segments().rbegin(); it != s.segments().rend(); ++it) {
    back.push_back({-it->generator, it->duration});
  }
  const PulseSchedule rev(2, 1.0, back);
  const auto v = pauli_string("Z");
  const auto first = first_order_error(s, v);
  const auto second = adjoint(propagator(s), first_order_error(rev, v));
  EXPECT_LE(dist(second.matrix(), first.matrix()), 1e-10);
  EXPECT_LE(dist(propagator(concatenate(s, rev)).matrix(), Matrix::Identity(2, 2)), 1e-12);
}

TEST(dynamics, susceptibility_series_examples) {
  const auto z = pauli_string("Z");
  const auto frozen = susceptibility_series(single(HermitianOp::zero(2), 2.0, 1.0), z, 2);
  ASSERT_EQ(frozen.size(), 2u);
  EXPECT_DOUBLE_EQ(frozen[0].t, 0.0);
  EXPECT_DOUBLE_EQ(frozen[0].norm, 0.0);
  EXPECT_DOUBLE_EQ(frozen[1].t, 2.0);
  EXPECT_NEAR(frozen[1].norm, 2.0, 1e-14);
  const auto sat = susceptibility_series(single(pauli_string("X"), pi, 1.0), z, 50);
  EXPECT_LE(sat.back().norm, 1e-10);
  EXPECT_THROW(susceptibility_series(single(pauli_string("X"), pi, 1.0), z, 1), ValidationError);
}

TEST(dynamics, susceptibility_last_point_matches_total) {
  std::mt19937_64 rng(19);
  const auto s = robustctl::testing::random_schedule(rng, 3, 4, 1.0);
  const auto v = robustctl::testing::random_traceless(rng, 3);
  const auto series = susceptibility_series(s, v, 37);
  EXPECT_NEAR(series.back().norm, op_norm(first_order_error(s, v)), 1e-9);
  // Monotone times, uniformly spaced.
  for (std::size_t k = 1; k < series.size(); ++k) {
    EXPECT_NEAR(series[k].t - series[k - 1].t, s.total_duration() / 36.0, 1e-12);
  }
}

TEST(dynamics, state_error_examples) {
  const auto frozen = single(HermitianOp::zero(2), 1.75, 1.0);
  EXPECT_NEAR(state_error(frozen, pauli_string("Z"), ket0()), 1.75, 1e-14);
  EXPECT_NEAR(state_error(frozen, pauli_string("X"), ket0()), 0.0, 1e-14);
  Vector bad = ket0() * 2.0;
  EXPECT_THROW(state_error(frozen, pauli_string("Z"), bad), ValidationError);
}

TEST(dynamics, speed_certificate_examples) {
  const double u = 1.5;
  const auto cert = speed_certificate(single(pauli_string("X") * u, pi / u, u), pauli_string("Z"), 2001);
  EXPECT_NEAR(cert.analytic_max, 2 * u, 1e-12);
  EXPECT_NEAR(cert.finite_difference_max, 2 * u, 1e-4);
  EXPECT_LE(cert.finite_difference_max, cert.bound * (1 + 1e-6));
  const auto idle = speed_certificate(single(HermitianOp::zero(2), 1.0, 1.0), pauli_string("Z"), 10);
  EXPECT_EQ(idle.finite_difference_max, 0.0);
  EXPECT_EQ(idle.analytic_max, 0.0);
}

TEST(dynamics, speed_never_exceeds_bound) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = 2 + trial % 3;
    const auto s = robustctl::testing::random_schedule(rng, d, 3, 1.7);
    const auto v = robustctl::testing::random_traceless(rng, d);
    const auto cert = speed_certificate(s, v, 500);
    EXPECT_LE(cert.analytic_max, cert.bound * (1 + 1e-6));
    EXPECT_LE(cert.finite_difference_max, cert.bound * (1 + 1e-6));
  }
}

TEST(dynamics, fixed_vector_examples) {
  const auto x = pauli_string("X");
  auto bad = fixed_vector_check({x}, NoiseSpace::from_paulis({"X"}));
  EXPECT_FALSE(bad.feasible);
  ASSERT_TRUE(bad.witness.has_value());
  EXPECT_NEAR(std::abs(hs_inner(*bad.witness, x)), 1.0, 1e-12);

  EXPECT_TRUE(fixed_vector_check({x, pauli_string("Z")}, NoiseSpace::full_su(1)).feasible);
  EXPECT_TRUE(fixed_vector_check({pauli_string("XI"), pauli_string("IX")}, NoiseSpace::from_paulis({"ZZ"})).feasible);
  // X1, X2 leave X1X2 fixed.
  auto xx = fixed_vector_check({pauli_string("XI"), pauli_string("IX")}, NoiseSpace::from_paulis({"ZZ", "XX"}));
  EXPECT_FALSE(xx.feasible);
  EXPECT_EQ(xx.fixed_dimension, 1u);
  EXPECT_NEAR(std::abs(hs_inner(*xx.witness, pauli_string("XX"))), 1.0, 1e-12);
  EXPECT_THROW(fixed_vector_check({}, NoiseSpace::full_su(1)), ValidationError);
}

TEST(dynamics, error_report_worst_case) {
  const auto s = single(pauli_string("X"), 1.0, 1.0);
  const auto rep = error_report(s, NoiseSpace::full_su(1));
  ASSERT_EQ(rep.errors.size(), 3u);
  double worst = 0.0;
  for (double n : rep.norms) worst = std::max(worst, n);
  EXPECT_DOUBLE_EQ(rep.worst_norm, worst);
  EXPECT_DOUBLE_EQ(rep.total_duration, 1.0);
  // X commutes with X: frozen error T * X.
  EXPECT_NEAR(rep.norms[0], 1.0, 1e-12);
}
