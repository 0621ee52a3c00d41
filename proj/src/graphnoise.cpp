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
#include <map>
#include <numbers>
#include <string>

#include "robustctl/graphnoise.hpp"

namespace robustctl {

namespace {

constexpr int kHilbertLimit = 4;

void require_positive(double x, const char *what) {
  if (!(x > 0.0) || !std::isfinite(x)) throw ValidationError(std::string(what) + " must be positive and finite");
}

}  // namespace

BoundReport graph_time_bound(const NoiseGraph &g, double u_loc) {
  require_positive(u_loc, "graph_time_bound: u_loc");
  const ColoringResult c = chromatic_number(g);
  BoundReport r;
  r.kind = "graph-time";
  r.value = std::numbers::pi * c.lower / u_loc;
  if (!c.exact) r.upper = std::numbers::pi * c.upper / u_loc;
  r.witness = {{"chromatic_lower", c.lower},
               {"chromatic_upper", c.upper},
               {"exact", c.exact},
               {"clique", c.clique},
               {"coloring", c.coloring},
               {"refutation_nodes", c.refutation_nodes},
               {"clique_floor", clique_time_floor(static_cast<int>(c.clique.size()), u_loc)}};
  return r;
}

FrequencyAssignment assign_frequencies(const NoiseGraph &g, double u_loc) {
  require_positive(u_loc, "assign_frequencies: u_loc");
  const ColoringResult c = chromatic_number(g);
  std::map<int, int> relabel;
  FrequencyAssignment fa;
  fa.u_loc = u_loc;
  for (int v = 0; v < g.size(); ++v) {
    const auto it = relabel.emplace(c.coloring[v], static_cast<int>(relabel.size()) + 1).first;
    fa.indices.push_back(it->second);
  }
  const int chi = static_cast<int>(relabel.size());
  fa.horizon = std::numbers::pi * chi / u_loc;
  fa.omega = 2.0 * std::numbers::pi / fa.horizon;
  return fa;
}

PulseSchedule graph_product_schedule(const FrequencyAssignment &fa) {
  const auto n = fa.indices.size();
  HermitianOp h = HermitianOp::zero(std::size_t{1} << n);
  double amplitude = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double omega_i = fa.indices[i] * fa.omega / 2.0;
    h += site_pauli('X', i, n) * omega_i;
    amplitude += omega_i;
  }
  return PulseSchedule(h.dim(), amplitude, {{h, fa.horizon}});
}

NoiseSpace graph_noise_space(const NoiseGraph &g) {
  const auto n = static_cast<std::size_t>(g.size());
  std::vector<HermitianOp> ops;
  for (std::size_t i = 0; i < n; ++i) ops.push_back(site_pauli('Z', i, n));
  for (const auto &[i, j] : g.edges()) {
    ops.push_back(hermitian_part(site_pauli('Z', i, n).matrix() * site_pauli('Z', j, n).matrix()));
  }
  return NoiseSpace::span(std::size_t{1} << n, ops);
}

GraphRobustnessReport verify_graph_robustness(const FrequencyAssignment &fa, const NoiseGraph &g, int n_quad) {
  if (static_cast<int>(fa.indices.size()) != g.size()) {
    throw ValidationError("verify_graph_robustness: assignment covers " + std::to_string(fa.indices.size()) +
                          " vertices, graph has " + std::to_string(g.size()));
  }
  require_positive(fa.horizon, "verify_graph_robustness: horizon");
  const int max_index = *std::max_element(fa.indices.begin(), fa.indices.end());
  if (*std::min_element(fa.indices.begin(), fa.indices.end()) < 1) {
    throw ValidationError("verify_graph_robustness: frequency indices must be positive");
  }
  for (const auto &[i, j] : g.edges()) {
    if (fa.indices[i] == fa.indices[j]) {
      throw ValidationError("verify_graph_robustness: adjacent vertices " + std::to_string(i) + " and " +
                            std::to_string(j) + " share frequency index " + std::to_string(fa.indices[i]));
    }
  }
  if (n_quad < 64 * max_index) {
    throw ValidationError("verify_graph_robustness: n_quad must be at least 64 * max index");
  }

  GraphRobustnessReport rep;
  const double t = fa.horizon;
  const double h = t / n_quad;
  // Periodic trapezoid rule: exact for trigonometric polynomials of degree < n_quad.
  std::vector<std::array<double, 2>> first(g.size(), {0.0, 0.0});
  for (int k = 0; k < n_quad; ++k) {
    const double tk = k * h;
    for (int i = 0; i < g.size(); ++i) {
      const double th = fa.indices[i] * fa.omega * tk;
      first[i][0] += h * std::cos(th);
      first[i][1] += h * std::sin(th);
    }
  }
  for (const auto &f : first) rep.max_first_moment = std::max({rep.max_first_moment, std::abs(f[0]), std::abs(f[1])});

  for (const auto &[i, j] : g.edges()) {
    std::array<double, 4> m{0.0, 0.0, 0.0, 0.0};
    for (int k = 0; k < n_quad; ++k) {
      const double tk = k * h;
      const double a = fa.indices[i] * fa.omega * tk, b = fa.indices[j] * fa.omega * tk;
      m[0] += h * std::cos(a) * std::cos(b);
      m[1] += h * std::cos(a) * std::sin(b);
      m[2] += h * std::sin(a) * std::cos(b);
      m[3] += h * std::sin(a) * std::sin(b);
    }
    EdgeMoment em{i, j, 0.0};
    for (double x : m) em.max_entry = std::max(em.max_entry, std::abs(x));
    rep.max_second_moment = std::max(rep.max_second_moment, em.max_entry);
    rep.edges.push_back(em);
  }

  rep.max_speed = max_index * fa.omega;
  rep.speed_cap = 2.0 * fa.u_loc;
  bool ok = rep.max_first_moment <= 1e-10 && rep.max_second_moment <= 1e-10 &&
            rep.max_speed <= rep.speed_cap * (1.0 + 1e-12);

  if (g.size() <= kHilbertLimit) {
    const PulseSchedule s = graph_product_schedule(fa);
    const NoiseSpace noise = graph_noise_space(g);
    double worst = 0.0;
    for (std::size_t e = 0; e < noise.size(); ++e) worst = std::max(worst, op_norm(first_order_error(s, noise[e])));
    rep.hilbert_max_error = worst;
    ok = ok && worst <= 1e-8 * t;
  }
  rep.passed = ok;
  return rep;
}

PoincareResult poincare_check(const FourierSeries &f, int m, double horizon) {
  require_positive(horizon, "poincare_check: horizon");
  if (m < 0) throw ValidationError("poincare_check: m must be nonnegative");
  if (f.cos.size() != f.sin.size()) throw ValidationError("poincare_check: cos and sin lengths differ");
  double scale = 1.0;
  for (std::size_t n = 0; n < f.cos.size(); ++n) scale = std::max({scale, std::abs(f.cos[n]), std::abs(f.sin[n])});
  for (int idx = 0; idx < m; ++idx) {
    const std::size_t mode = static_cast<std::size_t>(idx / 2);
    if (mode >= f.cos.size()) break;
    const double c = idx % 2 == 0 ? f.cos[mode] : f.sin[mode];
    if (std::abs(c) > 1e-12 * scale) {
      throw ValidationError("poincare_check: coefficient " + std::to_string(idx) +
                            " must vanish (orthogonality to the first m modes)");
    }
  }
  PoincareResult r;
  r.k = m / 2 + 1;
  const double w = 2.0 * std::numbers::pi / horizon;
  double energy = 0.0, slope = 0.0;
  for (std::size_t n = 0; n < f.cos.size(); ++n) {
    const double a2 = f.cos[n] * f.cos[n] + f.sin[n] * f.sin[n];
    const double freq = static_cast<double>(n + 1) * w;
    energy += a2 * horizon / 2.0;
    slope += freq * freq * a2 * horizon / 2.0;
  }
  r.lhs = energy;
  r.rhs = horizon * horizon / (4.0 * std::numbers::pi * std::numbers::pi * r.k * r.k) * slope;
  if (r.lhs > r.rhs * (1.0 + 1e-12)) {
    throw ConstructionError("poincare_check: inequality violated", r.lhs, r.rhs);
  }
  return r;
}

double clique_time_floor(int clique_size, double u_loc) {
  if (clique_size < 1) throw ValidationError("clique_time_floor: clique size must be at least 1");
  require_positive(u_loc, "clique_time_floor: u_loc");
  return std::numbers::pi * clique_size / u_loc;
}

}  // namespace robustctl
