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

#include "robustctl/graphnoise.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "gtest/gtest.h"

using namespace robustctl;
using std::numbers::pi;

namespace {

// Smallest k for which some assignment of k colors is proper, by brute force.
int brute_force_chi(const NoiseGraph &g) {
  const int n = g.size();
  for (int k = 1; k <= n; ++k) {
    std::vector<int> c(n, 0);
    while (true) {
      if (is_proper_coloring(g, c)) return k;
      int pos = 0;
      while (pos < n && ++c[pos] == k) c[pos++] = 0;
      if (pos == n) break;
    }
  }
  return n;
}

NoiseGraph random_graph(std::mt19937_64 &rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) e.push_back({i, j});
    }
  }
  return NoiseGraph(n, e);
}

}  // namespace

TEST(NoiseGraph, Validation) {
  EXPECT_THROW(NoiseGraph(0, {}), ValidationError);
  EXPECT_THROW(NoiseGraph(2, {{0, 0}}), ValidationError);
  EXPECT_THROW(NoiseGraph(2, {{0, 2}}), ValidationError);
  EXPECT_THROW(NoiseGraph(3, {{0, 1}, {1, 0}}), ValidationError);
  const NoiseGraph g(3, {{2, 0}});
  EXPECT_EQ(g.edges()[0], std::make_pair(0, 2));
  EXPECT_TRUE(g.adjacent(2, 0));
  EXPECT_FALSE(g.adjacent(1, 0));
}

TEST(EdgeList, RoundTripAndDiagnostics) {
  std::istringstream in("# ring\nn 4\n0 1\n1 2  # comment\n2 3\n3 0\n");
  const NoiseGraph g = read_edge_list(in);
  EXPECT_EQ(g.size(), 4);
  EXPECT_EQ(g.edges().size(), 4u);
  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream back(out.str());
  EXPECT_EQ(read_edge_list(back).edges(), g.edges());

  std::istringstream no_header("0 1\n");
  EXPECT_THROW(read_edge_list(no_header), ValidationError);
  std::istringstream bad("n 3\n0 x\n");
  try {
    read_edge_list(bad);
    FAIL();
  } catch (const ValidationError &e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(ChromaticNumber, Examples) {
  for (int n : {2, 3, 6, 9}) EXPECT_EQ(chromatic_number(NoiseGraph::path(n)).upper, 2) << n;
  for (int n : {3, 5, 7}) EXPECT_EQ(chromatic_number(NoiseGraph::cycle(n)).upper, 3) << n;
  for (int n : {4, 6}) EXPECT_EQ(chromatic_number(NoiseGraph::cycle(n)).upper, 2) << n;
  for (int n : {1, 2, 4, 7}) EXPECT_EQ(chromatic_number(NoiseGraph::complete(n)).upper, n) << n;
  EXPECT_EQ(chromatic_number(NoiseGraph(5, {})).upper, 1);
}

TEST(ChromaticNumber, CertificatesOnOddRing) {
  const NoiseGraph g = NoiseGraph::cycle(5);
  const ColoringResult c = chromatic_number(g);
  EXPECT_TRUE(c.exact);
  EXPECT_EQ(c.lower, 3);
  EXPECT_EQ(c.clique.size(), 2u);
  EXPECT_TRUE(is_proper_coloring(g, c.coloring));
  // The clique only gives 2, so 2-colorability has to be refuted by search.
  EXPECT_GT(c.refutation_nodes, 0u);
}

TEST(ChromaticNumber, MycielskiGraphNeedsFourColors) {
  // Groetzsch graph: triangle-free with chromatic number 4.
  const NoiseGraph g(11, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 1}, {5, 4}, {6, 0}, {6, 2}, {7, 1},
                          {7, 3}, {8, 2}, {8, 4}, {9, 3}, {9, 0}, {10, 5}, {10, 6}, {10, 7}, {10, 8}, {10, 9}});
  const ColoringResult c = chromatic_number(g);
  EXPECT_EQ(c.clique.size(), 2u);
  EXPECT_EQ(c.upper, 4);
  EXPECT_TRUE(c.exact);
  EXPECT_TRUE(is_proper_coloring(g, c.coloring));
}

TEST(ChromaticNumber, MatchesBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 40; ++t) {
    const int n = 3 + t % 6;
    const NoiseGraph g = random_graph(rng, n, 0.5);
    const ColoringResult c = chromatic_number(g);
    EXPECT_TRUE(c.exact);
    EXPECT_EQ(c.upper, brute_force_chi(g)) << t;
    EXPECT_TRUE(is_proper_coloring(g, c.coloring));
    for (std::size_t a = 0; a < c.clique.size(); ++a) {
      for (std::size_t b = a + 1; b < c.clique.size(); ++b) EXPECT_TRUE(g.adjacent(c.clique[a], c.clique[b]));
    }
  }
}

TEST(ChromaticNumber, IntervalAboveExactLimit) {
  std::mt19937_64 rng(13);
  const NoiseGraph g = random_graph(rng, 30, 0.3);
  const ColoringResult c = chromatic_number(g);
  EXPECT_LE(c.lower, c.upper);
  EXPECT_TRUE(is_proper_coloring(g, c.coloring));
  // Bipartite graphs above the limit are still pinned down by the clique.
  const ColoringResult p = chromatic_number(NoiseGraph::path(40));
  EXPECT_TRUE(p.exact);
  EXPECT_EQ(p.upper, 2);
}

TEST(GraphTimeBound, Examples) {
  EXPECT_NEAR(graph_time_bound(NoiseGraph::path(2), 1.0).value, 2.0 * pi, 1e-15);
  EXPECT_NEAR(graph_time_bound(NoiseGraph::cycle(5), 1.0).value, 3.0 * pi, 1e-15);
  EXPECT_NEAR(graph_time_bound(NoiseGraph::complete(5), 2.0).value, 5.0 * pi / 2.0, 1e-15);
  EXPECT_DOUBLE_EQ(graph_time_bound(NoiseGraph(1, {}), 1.3).value, single_noise_time_floor(1.3).value);
  EXPECT_FALSE(graph_time_bound(NoiseGraph::path(2), 1.0).upper.has_value());
}

TEST(AssignFrequencies, Examples) {
  const FrequencyAssignment p = assign_frequencies(NoiseGraph::path(4), 1.0);
  EXPECT_EQ(p.indices, (std::vector<int>{1, 2, 1, 2}));
  EXPECT_NEAR(p.horizon, 2.0 * pi, 1e-15);
  const FrequencyAssignment t = assign_frequencies(NoiseGraph::complete(3), 1.0);
  EXPECT_EQ(t.indices, (std::vector<int>{1, 2, 3}));
  EXPECT_NEAR(t.horizon, 3.0 * pi, 1e-15);
  const FrequencyAssignment s = assign_frequencies(NoiseGraph(1, {}), 2.0);
  EXPECT_EQ(s.indices, (std::vector<int>{1}));
  EXPECT_NEAR(s.horizon, pi / 2.0, 1e-15);
  // Saturation: the fastest vertex moves at exactly 2 u_loc.
  for (const auto &fa : {p, t, s}) {
    const int top = *std::max_element(fa.indices.begin(), fa.indices.end());
    EXPECT_NEAR(top * fa.omega, 2.0 * fa.u_loc, 1e-13);
  }
}

TEST(VerifyGraphRobustness, SingleEdge) {
  const NoiseGraph g = NoiseGraph::path(2);
  const FrequencyAssignment fa = assign_frequencies(g, 1.0);
  const GraphRobustnessReport r = verify_graph_robustness(fa, g, 256);
  EXPECT_TRUE(r.passed);
  EXPECT_LE(r.max_first_moment, 1e-10);
  EXPECT_LE(r.max_second_moment, 1e-10);
  ASSERT_TRUE(r.hilbert_max_error.has_value());
  EXPECT_LE(*r.hilbert_max_error, 1e-8 * fa.horizon);

  FrequencyAssignment same = fa;
  same.indices = {1, 1};
  EXPECT_THROW(verify_graph_robustness(same, g, 256), ValidationError);
  EXPECT_THROW(verify_graph_robustness(fa, g, 64), ValidationError);
}

TEST(VerifyGraphRobustness, NonEdgePairMayShareFrequency) {
  const NoiseGraph g = NoiseGraph::path(3);
  const FrequencyAssignment fa = assign_frequencies(g, 1.0);
  EXPECT_EQ(fa.indices[0], fa.indices[2]);
  const GraphRobustnessReport r = verify_graph_robustness(fa, g, 512);
  EXPECT_TRUE(r.passed);
  // The unprotected Z0 Z2 term survives: its second moment is T/2 on the diagonal.
  const PulseSchedule s = graph_product_schedule(fa);
  const HermitianOp z0z2 = pauli_string("ZIZ");
  EXPECT_NEAR(op_norm(first_order_error(s, z0z2)), fa.horizon, 1e-9);
}

TEST(VerifyGraphRobustness, CompleteGraphFullHilbertCheck) {
  const NoiseGraph g = NoiseGraph::complete(4);
  const FrequencyAssignment fa = assign_frequencies(g, 1.0);
  EXPECT_NEAR(fa.horizon, 4.0 * pi, 1e-14);
  const GraphRobustnessReport r = verify_graph_robustness(fa, g, 1024);
  EXPECT_TRUE(r.passed);
  ASSERT_TRUE(r.hilbert_max_error.has_value());
  EXPECT_LE(*r.hilbert_max_error, 1e-8 * fa.horizon);
  EXPECT_EQ(graph_noise_space(g).size(), 10u);
}

TEST(VerifyGraphRobustness, LargeRingSkipsHilbertCheck) {
  const NoiseGraph g = NoiseGraph::cycle(9);
  const FrequencyAssignment fa = assign_frequencies(g, 0.5);
  const GraphRobustnessReport r = verify_graph_robustness(fa, g, 512);
  EXPECT_TRUE(r.passed);
  EXPECT_FALSE(r.hilbert_max_error.has_value());
}

TEST(PoincareCheck, PureModesSaturate) {
  const double t = 2.5;
  for (int k = 1; k <= 6; ++k) {
    FourierSeries f;
    f.cos.assign(k, 0.0);
    f.sin.assign(k, 0.0);
    f.cos[k - 1] = 1.0;
    const PoincareResult r = poincare_check(f, 2 * (k - 1), t);
    EXPECT_EQ(r.k, k);
    EXPECT_NEAR(r.lhs / r.rhs, 1.0, 1e-12);
    EXPECT_NEAR(r.lhs, t / 2.0, 1e-14);
  }
}

TEST(PoincareCheck, HigherModeIsStrict) {
  const int k = 2;
  FourierSeries f;
  f.cos.assign(k + 3, 0.0);
  f.sin.assign(k + 3, 0.0);
  f.cos[k + 2] = 0.7;
  const PoincareResult r = poincare_check(f, 2 * (k - 1), 1.0);
  EXPECT_NEAR(r.lhs / r.rhs, double(k * k) / double((k + 3) * (k + 3)), 1e-14);
}

TEST(PoincareCheck, ZeroFunctionAndPrecondition) {
  const PoincareResult z = poincare_check(FourierSeries{}, 3, 1.0);
  EXPECT_EQ(z.lhs, 0.0);
  EXPECT_EQ(z.rhs, 0.0);
  FourierSeries f{{1.0, 0.0}, {0.0, 0.0}};
  EXPECT_THROW(poincare_check(f, 1, 1.0), ValidationError);
}

TEST(CliqueTimeFloor, Values) {
  EXPECT_DOUBLE_EQ(clique_time_floor(1, 1.0), pi);
  EXPECT_DOUBLE_EQ(clique_time_floor(2, 1.0), 2.0 * pi);
  EXPECT_DOUBLE_EQ(clique_time_floor(5, 1.0), 5.0 * pi);
  EXPECT_THROW(clique_time_floor(0, 1.0), ValidationError);
}
