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
#include <bit>
#include <charconv>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "robustctl/graphnoise.hpp"

namespace robustctl {

namespace {

constexpr int kExactLimit = 16;

// Bron-Kerbosch with pivoting on 64-bit vertex masks.
void max_clique_rec(const std::vector<std::uint64_t> &adj, std::uint64_t r, std::uint64_t p, std::uint64_t x,
                    std::uint64_t &best) {
  if (p == 0 && x == 0) {
    if (std::popcount(r) > std::popcount(best)) best = r;
    return;
  }
  if (std::popcount(r) + std::popcount(p) <= std::popcount(best)) return;
  const std::uint64_t px = p | x;
  const int pivot = std::countr_zero(px);
  std::uint64_t cand = p & ~adj[pivot];
  while (cand) {
    const int v = std::countr_zero(cand);
    const std::uint64_t bit = std::uint64_t{1} << v;
    max_clique_rec(adj, r | bit, p & adj[v], x & adj[v], best);
    p &= ~bit;
    x |= bit;
    cand &= ~bit;
  }
}

std::vector<int> max_clique(const NoiseGraph &g) {
  const int n = g.size();
  std::vector<int> out;
  if (n == 0) return out;
  if (n <= 64) {
    std::vector<std::uint64_t> adj(n, 0);
    for (const auto &[i, j] : g.edges()) {
      adj[i] |= std::uint64_t{1} << j;
      adj[j] |= std::uint64_t{1} << i;
    }
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::uint64_t best = 1;
    max_clique_rec(adj, 0, all, 0, best);
    for (int v = 0; v < n; ++v) {
      if (best & (std::uint64_t{1} << v)) out.push_back(v);
    }
    return out;
  }
  // Greedy clique by descending degree; still a valid lower bound.
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.neighbors(a).size() > g.neighbors(b).size(); });
  for (int v : order) {
    if (std::all_of(out.begin(), out.end(), [&](int u) { return g.adjacent(u, v); })) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int saturation(const NoiseGraph &g, const std::vector<int> &colors, int v) {
  std::set<int> seen;
  for (int u : g.neighbors(v)) {
    if (colors[u] >= 0) seen.insert(colors[u]);
  }
  return static_cast<int>(seen.size());
}

// Uncolored vertex of highest saturation, ties by degree then index.
int pick_dsatur(const NoiseGraph &g, const std::vector<int> &colors) {
  int best = -1, best_sat = -1, best_deg = -1;
  for (int v = 0; v < g.size(); ++v) {
    if (colors[v] >= 0) continue;
    const int sat = saturation(g, colors, v);
    const int deg = static_cast<int>(g.neighbors(v).size());
    if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
      best = v;
      best_sat = sat;
      best_deg = deg;
    }
  }
  return best;
}

std::vector<int> dsatur(const NoiseGraph &g) {
  std::vector<int> colors(g.size(), -1);
  for (int step = 0; step < g.size(); ++step) {
    const int v = pick_dsatur(g, colors);
    int c = 0;
    while (std::any_of(g.neighbors(v).begin(), g.neighbors(v).end(), [&](int u) { return colors[u] == c; })) ++c;
    colors[v] = c;
  }
  return colors;
}

bool color_with(const NoiseGraph &g, std::vector<int> &colors, int k, int used, int remaining,
                std::uint64_t &nodes) {
  if (remaining == 0) return true;
  ++nodes;
  const int v = pick_dsatur(g, colors);
  // Symmetry breaking: a fresh color is only ever the next unused one.
  const int limit = std::min(k, used + 1);
  for (int c = 0; c < limit; ++c) {
    const auto &nb = g.neighbors(v);
    if (std::any_of(nb.begin(), nb.end(), [&](int u) { return colors[u] == c; })) continue;
    colors[v] = c;
    if (color_with(g, colors, k, std::max(used, c + 1), remaining - 1, nodes)) return true;
    colors[v] = -1;
  }
  return false;
}

}  // namespace

NoiseGraph::NoiseGraph(int n, std::vector<std::pair<int, int>> edges) : n_(n), adj_(n < 0 ? 0 : n) {
  if (n < 1) throw ValidationError("NoiseGraph: at least one vertex is required");
  std::set<std::pair<int, int>> seen;
  for (auto [i, j] : edges) {
    if (i < 0 || j < 0 || i >= n || j >= n) {
      throw ValidationError("NoiseGraph: edge (" + std::to_string(i) + ", " + std::to_string(j) +
                            ") out of range");
    }
    if (i == j) throw ValidationError("NoiseGraph: self-loop at vertex " + std::to_string(i));
    if (i > j) std::swap(i, j);
    if (!seen.insert({i, j}).second) {
      throw ValidationError("NoiseGraph: duplicate edge (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    }
    edges_.push_back({i, j});
    adj_[i].push_back(j);
    adj_[j].push_back(i);
  }
  for (auto &a : adj_) std::sort(a.begin(), a.end());
}

NoiseGraph NoiseGraph::path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return NoiseGraph(n, e);
}

NoiseGraph NoiseGraph::cycle(int n) {
  if (n < 3) throw ValidationError("NoiseGraph::cycle: needs at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return NoiseGraph(n, e);
}

NoiseGraph NoiseGraph::complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  }
  return NoiseGraph(n, e);
}

bool NoiseGraph::adjacent(int i, int j) const {
  const auto &a = adj_.at(i);
  return std::binary_search(a.begin(), a.end(), j);
}

NoiseGraph read_edge_list(std::istream &in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    auto fail = [&](const std::string &msg) {
      throw ValidationError("edge list line " + std::to_string(line_no) + ": " + msg);
    };
    std::string extra;
    if (n < 0) {
      if (first != "n" || !(ls >> n) || (ls >> extra)) fail("expected header 'n <count>'");
      if (n < 1) fail("vertex count must be positive");
      continue;
    }
    int i = 0, j = 0;
    const auto [ptr, ec] = std::from_chars(first.data(), first.data() + first.size(), i);
    if (ec != std::errc() || ptr != first.data() + first.size()) fail("malformed vertex '" + first + "'");
    if (!(ls >> j) || (ls >> extra)) fail("expected 'i j'");
    edges.push_back({i, j});
  }
  if (n < 0) throw ValidationError("edge list: missing header 'n <count>'");
  return NoiseGraph(n, edges);
}

void write_edge_list(std::ostream &out, const NoiseGraph &g) {
  out << "n " << g.size() << "\n";
  for (const auto &[i, j] : g.edges()) out << i << " " << j << "\n";
}

bool is_proper_coloring(const NoiseGraph &g, const std::vector<int> &colors) {
  if (static_cast<int>(colors.size()) != g.size()) return false;
  if (std::any_of(colors.begin(), colors.end(), [](int c) { return c < 0; })) return false;
  return std::none_of(g.edges().begin(), g.edges().end(),
                      [&](const auto &e) { return colors[e.first] == colors[e.second]; });
}

ColoringResult chromatic_number(const NoiseGraph &g) {
  ColoringResult r;
  r.clique = max_clique(g);
  r.lower = std::max(1, static_cast<int>(r.clique.size()));
  r.coloring = dsatur(g);
  r.upper = 1 + *std::max_element(r.coloring.begin(), r.coloring.end());
  if (g.size() > kExactLimit) {
    r.exact = r.lower == r.upper;
    return r;
  }
  // Descend from the heuristic until k colors are refuted.
  while (r.upper > r.lower) {
    std::vector<int> trial(g.size(), -1);
    std::uint64_t nodes = 0;
    if (!color_with(g, trial, r.upper - 1, 0, g.size(), nodes)) {
      r.refutation_nodes = nodes;
      break;
    }
    r.coloring = trial;
    r.upper = 1 + *std::max_element(trial.begin(), trial.end());
  }
  r.lower = r.upper;
  r.exact = true;
  return r;
}

}  // namespace robustctl
