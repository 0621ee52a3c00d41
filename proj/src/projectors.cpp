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
#include <cmath>
#include <cstdint>
#include <random>
#include <string>

#include "robustctl/schedules.hpp"

namespace robustctl {

namespace {

constexpr std::size_t kMaxSearchDim = 16;
constexpr double kContainmentTol = 1e-9;

HermitianOp block_projector(const Matrix &vectors, const std::vector<int> &cols) {
  const Eigen::Index d = vectors.rows();
  Matrix p = Matrix::Zero(d, d);
  for (int c : cols) p += vectors.col(c) * vectors.col(c).adjoint();
  return hermitian_part(p);
}

double containment_residual(const ProjectorFamily &fam, const NoiseSpace &noise) {
  double worst = 0.0;
  for (const auto &g : fam.trace_zero_generators()) {
    const HermitianOp r = g - noise.basis().project(g);
    const double rel = std::sqrt(std::max(0.0, hs_inner(r, r)) / hs_inner(g, g));
    worst = std::max(worst, rel);
  }
  return worst;
}

}  // namespace

std::vector<std::vector<int>> zero_sum_blocks(const std::vector<double> &values, double tol) {
  if (values.size() > kMaxSearchDim) {
    throw UnsupportedError("zero_sum_blocks: exact search is limited to 16 values");
  }
  std::vector<int> remaining(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) remaining[i] = static_cast<int>(i);

  std::vector<std::vector<int>> blocks;
  while (!remaining.empty()) {
    const auto n = static_cast<unsigned>(remaining.size());
    const std::uint32_t full = (n == 32 ? 0u : (1u << n)) - 1u;
    std::uint32_t best = full;
    int best_count = static_cast<int>(n);
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      const int count = std::popcount(mask);
      if (count >= best_count) continue;
      double sum = 0.0;
      for (unsigned b = 0; b < n; ++b) {
        if (mask & (1u << b)) sum += values[remaining[b]];
      }
      if (std::abs(sum) <= tol) {
        best = mask;
        best_count = count;
      }
    }
    std::vector<int> block, rest;
    for (unsigned b = 0; b < n; ++b) ((best & (1u << b)) ? block : rest).push_back(remaining[b]);
    blocks.push_back(std::move(block));
    remaining = std::move(rest);
  }
  return blocks;
}

ProjectorSearch find_projectors(const NoiseSpace &noise, std::uint64_t seed) {
  if (noise.size() == 0) throw ValidationError("find_projectors: empty noise space");
  const std::size_t d = noise.dim();
  if (d > kMaxSearchDim) throw UnsupportedError("find_projectors: dimension above 16 is not supported");

  ProjectorSearch out;
  auto add = [&](std::string source, int draw, ProjectorFamily fam) {
    ProjectorCandidate c;
    c.source = std::move(source);
    c.draw = draw;
    c.containment_residual = containment_residual(fam, noise);
    c.certified = c.containment_residual <= kContainmentTol;
    c.bound = static_cast<int>(projection_bound(fam).value);
    c.family = std::move(fam);
    out.candidates.push_back(std::move(c));
  };

  add("trivial", -1, ProjectorFamily(d, {HermitianOp::identity(d)}));

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int draw = 0; draw < 3; ++draw) {
    HermitianOp v = HermitianOp::zero(d);
    for (std::size_t i = 0; i < noise.size(); ++i) v += noise[i] * gauss(rng);
    const Spectrum sp = spectrum(v);
    const double scale = std::max(op_norm(v), 1e-300);
    const auto n = static_cast<int>(d);

    std::vector<HermitianOp> rank_one;
    for (int k = 0; k < n; ++k) rank_one.push_back(block_projector(sp.vectors, {k}));
    add("rank-one", draw, ProjectorFamily(d, rank_one));

    std::vector<HermitianOp> eig;
    std::vector<int> group{0};
    for (int k = 1; k <= n; ++k) {
      if (k == n || sp.values(k) - sp.values(k - 1) > 1e-8 * scale) {
        eig.push_back(block_projector(sp.vectors, group));
        group.clear();
      }
      if (k < n) group.push_back(k);
    }
    if (eig.size() > 1 && eig.size() < d) add("eigenspaces", draw, ProjectorFamily(d, eig));

    std::vector<double> values(sp.values.data(), sp.values.data() + n);
    const auto blocks = zero_sum_blocks(values, 1e-8 * scale);
    if (blocks.size() > 1) {
      std::vector<HermitianOp> bp;
      for (const auto &b : blocks) bp.push_back(block_projector(sp.vectors, b));
      add("zero-trace-blocks", draw, ProjectorFamily(d, bp));
    }
  }

  for (std::size_t i = 0; i < out.candidates.size(); ++i) {
    const auto &c = out.candidates[i];
    if (c.certified && c.bound > out.candidates[out.best].bound) out.best = i;
  }
  const ProjectorCandidate &best = out.candidates[out.best];
  out.bound = projection_bound(best.family);
  out.bound.witness["source"] = best.source;
  out.bound.witness["draw"] = best.draw;
  out.bound.witness["containment_residual"] = best.containment_residual;
  nlohmann::json rejected = nlohmann::json::array();
  for (const auto &c : out.candidates) {
    if (!c.certified) {
      rejected.push_back({{"source", c.source}, {"draw", c.draw}, {"bound", c.bound},
                          {"containment_residual", c.containment_residual}});
    }
  }
  out.bound.witness["rejected"] = rejected;
  out.bound.witness["certified"] = best.source != "trivial";
  return out;
}

}  // namespace robustctl
