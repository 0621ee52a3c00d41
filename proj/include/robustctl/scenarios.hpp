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

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "robustctl/dynamics.hpp"
#include "robustctl/graphnoise.hpp"
#include "robustctl/schedules.hpp"

namespace robustctl {

/// One checked quantity of a scenario.
struct Metric {
  std::string name;
  double value = 0.0;
  /// "near" (|value - target| <= tol), "le" (value <= target), "ge", or
  /// "info" (reported, never fails).
  std::string check = "info";
  double target = 0.0;
  double tol = 0.0;
  /// Where the target comes from: "reference-value", "closed-form" or
  /// "independent-oracle".
  std::string basis;
  bool passed = true;
};

struct ScenarioResult {
  std::string name;
  bool passed = true;
  std::vector<Metric> metrics;
  std::vector<std::string> notes;
  nlohmann::json details = nlohmann::json::object();
  /// Files written, relative to the output directory.
  std::vector<std::string> artifacts;

  void near(const std::string &n, double value, double target, double tol, const std::string &basis);
  void at_most(const std::string &n, double value, double limit, const std::string &basis);
  void at_least(const std::string &n, double value, double limit, const std::string &basis);
  void info(const std::string &n, double value);
  const Metric *find(const std::string &n) const;
};

struct ScenarioOptions {
  double u_max = 1.0;
  double u_loc = 1.0;
  std::uint64_t seed = 20240601;
  /// When set, artifacts are written under <out_dir>/<scenario name>/.
  std::optional<std::filesystem::path> out_dir;
  /// Samples for the trajectory and susceptibility CSVs.
  int series_points = 401;
};

/// Names accepted by run_scenario, in run order.
const std::vector<std::string> &scenario_names();

/// Throws ValidationError for unknown names.
ScenarioResult run_scenario(const std::string &name, const ScenarioOptions &opts = {});

ScenarioResult scenario_dd_xzxy(const ScenarioOptions &opts);
ScenarioResult scenario_tetrahedron(const ScenarioOptions &opts);
ScenarioResult scenario_ising_2q(const ScenarioOptions &opts);
ScenarioResult scenario_chain(int n, bool closed, const ScenarioOptions &opts);
ScenarioResult scenario_complete(int n, const ScenarioOptions &opts);
ScenarioResult scenario_saturation(const ScenarioOptions &opts);

nlohmann::json to_json(const ScenarioResult &r);

// Builders shared with the tests and the CLI.

/// Four pi pulses H = u P (P = X, Z, X, Y), each of duration pi / (2u).
PulseSchedule xzxy_schedule(double u_max);

using Vec3 = std::array<double, 3>;

/// Vertices as tabulated (x3 is not unit length).
std::array<Vec3, 4> tetrahedron_table_vertices();
/// Unit regular tetrahedron through the north pole whose last arc is driven by X.
std::array<Vec3, 4> tetrahedron_repaired_vertices();
/// Drive axes as tabulated.
std::array<Vec3, 4> tetrahedron_table_axes();
/// Axes x_i cross x_{i+1}, normalized.
std::array<Vec3, 4> tetrahedron_axes_from_vertices(const std::array<Vec3, 4> &x);
/// H = u (n . sigma) for each axis, each of duration T* / 4 with T* = 2 arccos(-1/3) / u.
PulseSchedule tetrahedron_schedule(const std::array<Vec3, 4> &axes, double u_max);

/// Bloch vector of U(t)|psi0>.
Vec3 bloch_vector(const PulseSchedule &s, double t, const Vector &psi0);

}  // namespace robustctl
