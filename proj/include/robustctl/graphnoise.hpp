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
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "robustctl/dynamics.hpp"
#include "robustctl/schedules.hpp"

namespace robustctl {

/// Simple undirected graph on vertices 0..n-1. Each vertex carries local Z
/// noise and each edge ZZ noise.
class NoiseGraph {
 public:
  NoiseGraph() = default;
  NoiseGraph(int n, std::vector<std::pair<int, int>> edges);

  static NoiseGraph path(int n);
  static NoiseGraph cycle(int n);
  static NoiseGraph complete(int n);

  int size() const { return n_; }
  /// Normalized so that first < second, in input order.
  const std::vector<std::pair<int, int>> &edges() const { return edges_; }
  bool adjacent(int i, int j) const;
  const std::vector<int> &neighbors(int i) const { return adj_[i]; }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

/// Reads "n <count>" followed by one "i j" pair per line; '#' starts a comment.
NoiseGraph read_edge_list(std::istream &in);
void write_edge_list(std::ostream &out, const NoiseGraph &g);

struct ColoringResult {
  /// chi(G) when `exact`; otherwise chi lies in [lower, upper].
  int lower = 0;
  int upper = 0;
  bool exact = false;
  /// Proper coloring with `upper` colors, 0-based.
  std::vector<int> coloring;
  /// Largest clique found (maximum for n <= 64).
  std::vector<int> clique;
  /// Search nodes spent proving that upper - 1 colors do not suffice. Zero
  /// when the clique alone certifies optimality.
  std::uint64_t refutation_nodes = 0;
};

/// Exact branch and bound for n <= 16 (clique lower bound, DSATUR upper
/// bound); a certified interval above that.
ColoringResult chromatic_number(const NoiseGraph &g);

/// Proper coloring check.
bool is_proper_coloring(const NoiseGraph &g, const std::vector<int> &colors);

/// T >= pi chi / u_loc; interval-valued when chi is.
BoundReport graph_time_bound(const NoiseGraph &g, double u_loc);

struct FrequencyAssignment {
  double horizon = 0.0;
  /// Base angular frequency 2 pi / horizon.
  double omega = 0.0;
  double u_loc = 0.0;
  /// Positive frequency index per vertex.
  std::vector<int> indices;
};

/// Colors with chi colors, relabels colors by first appearance (vertex 0 gets
/// index 1) and sets T = pi chi / u_loc so the fastest trajectory moves at
/// exactly 2 u_loc.
FrequencyAssignment assign_frequencies(const NoiseGraph &g, double u_loc);

struct EdgeMoment {
  int i = 0;
  int j = 0;
  /// Largest |entry| of the 2x2 second-moment matrix.
  double max_entry = 0.0;
};

struct GraphRobustnessReport {
  /// Largest |entry| over all first-moment vectors.
  double max_first_moment = 0.0;
  double max_second_moment = 0.0;
  std::vector<EdgeMoment> edges;
  /// Largest trajectory speed n_i omega, and the cap 2 u_loc.
  double max_speed = 0.0;
  double speed_cap = 0.0;
  /// Largest ||E|| over the graph noise space from the full product
  /// schedule; only computed for n <= 4.
  std::optional<double> hilbert_max_error;
  bool passed = false;
};

/// Local drives H = sum_i (n_i omega / 2) X_i over [0, T], with u_max equal
/// to the summed amplitudes.
PulseSchedule graph_product_schedule(const FrequencyAssignment &fa);

/// Graph noise space span{Z_i} + span{Z_i Z_j : (i, j) in E}.
NoiseSpace graph_noise_space(const NoiseGraph &g);

GraphRobustnessReport verify_graph_robustness(const FrequencyAssignment &fa, const NoiseGraph &g, int n_quad);

/// f(t) = sum_n a_n cos(n w t) + b_n sin(n w t), w = 2 pi / T; index n - 1.
struct FourierSeries {
  std::vector<double> cos;
  std::vector<double> sin;
};

struct PoincareResult {
  double lhs = 0.0;
  double rhs = 0.0;
  int k = 0;
};

/// Both sides of int f^2 <= T^2 / (4 pi^2 k^2) int f'^2, k = floor(m/2) + 1,
/// for f orthogonal to the first m modes (cos 1, sin 1, cos 2, ...).
PoincareResult poincare_check(const FourierSeries &f, int m, double horizon);

/// pi N / u_loc for a clique of size N.
double clique_time_floor(int clique_size, double u_loc);

}  // namespace robustctl
