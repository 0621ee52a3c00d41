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
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "robustctl/robustify.hpp"

namespace robustctl {

FlipOperator::FlipOperator(HermitianOp r, const HermitianOp &noise, const Tolerances &tol) : r_(std::move(r)) {
  require_same_dim(r_.dim(), noise.dim(), "FlipOperator");
  if (!is_involution(r_, tol)) {
    throw ValidationError("FlipOperator: R is not an involution");
  }
  if (max_abs_entry((sandwich(r_, noise) + noise).matrix()) > tol.algebraic * std::max(1.0, op_norm(noise))) {
    throw ValidationError("FlipOperator: R V R != -V");
  }
}

RobustGate robustify_gate(const PulseSchedule &s, const HermitianOp &v, const FlipOperator &r,
                          const Tolerances &tol) {
  require_same_dim(s.dim(), v.dim(), "robustify_gate");
  require_same_dim(s.dim(), r.op().dim(), "robustify_gate");
  if (!is_involution(v, tol)) {
    throw ValidationError("robustify_gate: noise operator must satisfy V^2 = I");
  }
  if (max_abs_entry((sandwich(r.op(), v) + v).matrix()) > tol.algebraic) {
    throw ValidationError("robustify_gate: flip does not anticommute with V");
  }
  const double u_max = s.u_max();
  const double flip_time = std::numbers::pi / (2.0 * u_max);
  const ControlSegment flip{r.op() * u_max, flip_time};

  std::vector<ControlSegment> out;
  for (const auto &seg : s.segments()) {
    out.push_back({seg.generator * 0.5, 2.0 * seg.duration});
  }
  out.push_back(flip);
  for (auto it = s.segments().rbegin(); it != s.segments().rend(); ++it) {
    out.push_back({-sandwich(r.op(), it->generator), it->duration});
  }
  for (const auto &seg : s.segments()) {
    out.push_back({sandwich(r.op(), seg.generator), seg.duration});
  }
  out.push_back(flip);

  RobustGate res;
  res.base_duration = s.total_duration();
  res.schedule = PulseSchedule(s.dim(), u_max, std::move(out));
  res.error_norm = op_norm(first_order_error(res.schedule, v, tol));
  res.overlap = phase_overlap(propagator(res.schedule), propagator(s));

  const double err_limit = 1e-8 * res.base_duration * op_norm(v);
  if (!(res.error_norm <= err_limit) || !(res.overlap >= 1.0 - 1e-8)) {
    throw ConstructionError("robustify_gate: verification failed (error " + std::to_string(res.error_norm) +
                                ", overlap " + std::to_string(res.overlap) + ")",
                            res.error_norm, 1.0 - res.overlap);
  }
  return res;
}

}  // namespace robustctl
