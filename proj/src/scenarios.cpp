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

#include "robustctl/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "robustctl/io.hpp"

namespace robustctl {

namespace {

using std::numbers::pi;
using nlohmann::json;

const char *kRef = "reference-value";
const char *kClosed = "closed-form";
const char *kOracle = "independent-oracle";

double tetra_time(double u) { return 2.0 * std::acos(-1.0 / 3.0) / u; }

Vec3 cross(const Vec3 &a, const Vec3 &b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double dot(const Vec3 &a, const Vec3 &b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
double norm(const Vec3 &a) { return std::sqrt(dot(a, a)); }
Vec3 normalized(const Vec3 &a) {
  const double n = norm(a);
  return {a[0] / n, a[1] / n, a[2] / n};
}
double distance(const Vec3 &a, const Vec3 &b) { return norm({a[0] - b[0], a[1] - b[1], a[2] - b[2]}); }

HermitianOp bloch_op(const Vec3 &n) {
  return pauli_string("X") * n[0] + pauli_string("Y") * n[1] + pauli_string("Z") * n[2];
}

Vector ket0() {
  Vector v = Vector::Zero(2);
  v(0) = 1.0;
  return v;
}

std::filesystem::path scenario_dir(const ScenarioOptions &opts, const std::string &name) {
  return *opts.out_dir / name;
}

void write_report(ScenarioResult &r, const ScenarioOptions &opts) {
  if (!opts.out_dir) return;
  io::write_json_atomic(scenario_dir(opts, r.name) / "report.json", to_json(r));
}

void add_csv(ScenarioResult &r, const ScenarioOptions &opts, const std::string &file,
             const std::vector<std::string> &header, const std::vector<std::vector<double>> &rows) {
  if (!opts.out_dir) return;
  io::write_csv_atomic(scenario_dir(opts, r.name) / file, header, rows);
  r.artifacts.push_back(file);
}

void add_json(ScenarioResult &r, const ScenarioOptions &opts, const std::string &file, const json &j) {
  if (!opts.out_dir) return;
  io::write_json_atomic(scenario_dir(opts, r.name) / file, j);
  r.artifacts.push_back(file);
}

json vec_json(const Vec3 &v) { return json::array({v[0], v[1], v[2]}); }

// Bloch trajectory and state susceptibilities of a single-qubit schedule.
void emit_qubit_series(ScenarioResult &r, const ScenarioOptions &opts, const PulseSchedule &s,
                       const std::string &tag) {
  if (!opts.out_dir) return;
  const Vector psi0 = ket0();
  const int n = std::max(2, opts.series_points);
  const double t_end = s.total_duration();
  std::vector<std::vector<double>> bloch;
  for (int k = 0; k < n; ++k) {
    const double t = k + 1 == n ? t_end : t_end * k / (n - 1);
    const Vec3 b = bloch_vector(s, t, psi0);
    bloch.push_back({t, b[0], b[1], b[2]});
  }
  add_csv(r, opts, "bloch_" + tag + ".csv", {"t", "x", "y", "z"}, bloch);

  std::vector<std::vector<SeriesPoint>> series;
  for (const char *p : {"X", "Y", "Z"}) series.push_back(susceptibility_series(s, pauli_string(p), n, &psi0));
  std::vector<std::vector<double>> rows;
  for (int k = 0; k < n; ++k) {
    rows.push_back({series[0][k].t, *series[0][k].state_value, *series[1][k].state_value, *series[2][k].state_value,
                    series[0][k].norm, series[1][k].norm, series[2][k].norm});
  }
  add_csv(r, opts, "susceptibility_" + tag + ".csv",
          {"t", "state_X", "state_Y", "state_Z", "norm_X", "norm_Y", "norm_Z"}, rows);
}

double max_error_norm(const PulseSchedule &s, const NoiseSpace &noise) {
  double worst = 0.0;
  for (std::size_t i = 0; i < noise.size(); ++i) worst = std::max(worst, op_norm(first_order_error(s, noise[i])));
  return worst;
}

}  // namespace

void ScenarioResult::near(const std::string &n, double value, double target, double tol, const std::string &basis) {
  Metric m{n, value, "near", target, tol, basis, std::abs(value - target) <= tol};
  passed = passed && m.passed;
  metrics.push_back(m);
}

void ScenarioResult::at_most(const std::string &n, double value, double limit, const std::string &basis) {
  Metric m{n, value, "le", limit, 0.0, basis, value <= limit};
  passed = passed && m.passed;
  metrics.push_back(m);
}

void ScenarioResult::at_least(const std::string &n, double value, double limit, const std::string &basis) {
  Metric m{n, value, "ge", limit, 0.0, basis, value >= limit};
  passed = passed && m.passed;
  metrics.push_back(m);
}

void ScenarioResult::info(const std::string &n, double value) { metrics.push_back({n, value, "info", 0.0, 0.0, "", true}); }

const Metric *ScenarioResult::find(const std::string &n) const {
  for (const auto &m : metrics) {
    if (m.name == n) return &m;
  }
  return nullptr;
}

const std::vector<std::string> &scenario_names() {
  static const std::vector<std::string> names{"saturation",  "dd-xzxy",   "tetrahedron", "ising-2q",
                                              "chain-open", "ring-odd", "ring-even",   "complete"};
  return names;
}

ScenarioResult run_scenario(const std::string &name, const ScenarioOptions &opts) {
  if (name == "saturation") return scenario_saturation(opts);
  if (name == "dd-xzxy") return scenario_dd_xzxy(opts);
  if (name == "tetrahedron") return scenario_tetrahedron(opts);
  if (name == "ising-2q") return scenario_ising_2q(opts);
  if (name == "chain-open") return scenario_chain(6, false, opts);
  if (name == "ring-odd") return scenario_chain(5, true, opts);
  if (name == "ring-even") return scenario_chain(4, true, opts);
  if (name == "complete") return scenario_complete(4, opts);
  std::string known;
  for (const auto &n : scenario_names()) known += (known.empty() ? "" : ", ") + n;
  throw ValidationError("unknown scenario '" + name + "' (available: " + known + ")");
}

PulseSchedule xzxy_schedule(double u_max) {
  std::vector<ControlSegment> segs;
  for (const char *p : {"X", "Z", "X", "Y"}) segs.push_back({pauli_string(p) * u_max, pi / (2.0 * u_max)});
  return PulseSchedule(2, u_max, segs);
}

std::array<Vec3, 4> tetrahedron_table_vertices() {
  const double s6 = std::sqrt(6.0), s3 = std::sqrt(3.0);
  return {{{0.0, 0.0, 1.0}, {s6 / 3.0, 1.0 / (2.0 * s3), -0.5}, {-s6 / 3.0, 1.0 / 3.0, 0.0}, {0.0, -s3 / 2.0, -0.5}}};
}

std::array<Vec3, 4> tetrahedron_repaired_vertices() {
  const double s6 = std::sqrt(6.0), s2 = std::sqrt(2.0);
  return {{{0.0, 0.0, 1.0},
           {s6 / 3.0, -s2 / 3.0, -1.0 / 3.0},
           {-s6 / 3.0, -s2 / 3.0, -1.0 / 3.0},
           {0.0, 2.0 * s2 / 3.0, -1.0 / 3.0}}};
}

std::array<Vec3, 4> tetrahedron_table_axes() {
  const double s6 = std::sqrt(6.0), s2 = std::sqrt(2.0);
  return {{{1.0 / 3.0, -2.0 * s2 / 3.0, 0.0},
           {-1.0 / 3.0, -s2 / 3.0, -s6 / 3.0},
           {1.0 / 3.0, s2 / 3.0, -s6 / 3.0},
           {1.0, 0.0, 0.0}}};
}

std::array<Vec3, 4> tetrahedron_axes_from_vertices(const std::array<Vec3, 4> &x) {
  std::array<Vec3, 4> k;
  for (int i = 0; i < 4; ++i) k[i] = normalized(cross(x[i], x[(i + 1) % 4]));
  return k;
}

PulseSchedule tetrahedron_schedule(const std::array<Vec3, 4> &axes, double u_max) {
  std::vector<ControlSegment> segs;
  for (const auto &k : axes) segs.push_back({bloch_op(k) * u_max, tetra_time(u_max) / 4.0});
  return PulseSchedule(2, u_max, segs);
}

Vec3 bloch_vector(const PulseSchedule &s, double t, const Vector &psi0) {
  if (s.dim() != 2) throw ValidationError("bloch_vector: single-qubit schedules only");
  const Vector psi = propagator_at(s, t).matrix() * psi0;
  const Complex c = std::conj(psi(0)) * psi(1);
  return {2.0 * c.real(), 2.0 * c.imag(), std::norm(psi(0)) - std::norm(psi(1))};
}

ScenarioResult scenario_saturation(const ScenarioOptions &opts) {
  ScenarioResult r;
  r.name = "saturation";
  const double u = opts.u_max;
  const double t = single_noise_time_floor(u).value;
  const PulseSchedule s(2, u, {{pauli_string("X") * u, t}});
  r.at_most("error_norm_Z", op_norm(first_order_error(s, pauli_string("Z"))), 1e-10, kClosed);
  r.near("total_time", s.total_duration(), pi / u, 0.0, kRef);
  r.at_most("propagator_minus_identity_phase", max_abs_entry(propagator(s).matrix() + Matrix::Identity(2, 2)),
            1e-12, kClosed);
  r.info("global_phase_overlap", phase_overlap(propagator(s), UnitaryOp::identity(2)));
  write_report(r, opts);
  return r;
}

ScenarioResult scenario_dd_xzxy(const ScenarioOptions &opts) {
  ScenarioResult r;
  r.name = "dd-xzxy";
  const double u = opts.u_max;

  const auto discrete = MixedUnitarySchedule::from_paulis({"I", "X", "Y", "Z"});
  const NoiseSpace su2 = NoiseSpace::full_su(1);
  const AnnihilationResult ann = annihilates(discrete, su2, 1e-12);
  const char *labels[] = {"X", "Y", "Z"};
  for (std::size_t i = 0; i < ann.residuals.size(); ++i) {
    r.at_most(std::string("discrete_residual_") + labels[i], ann.residuals[i], 1e-12, kClosed);
  }
  r.near("schedule_length", static_cast<double>(discrete.size()), 4.0, 0.0, kRef);
  r.near("coherent_bound", coherent_bound(2).value, 4.0, 0.0, kRef);
  r.near("choi_rank", choi_rank(discrete), 4.0, 0.0, kOracle);

  const PulseSchedule cont = xzxy_schedule(u);
  r.near("total_time", cont.total_duration(), 2.0 * pi / u, 1e-12 * 2.0 * pi / u, kRef);

  // Back-to-back continuous pi pulses are not first-order robust; the
  // residual and a search over all signed Pauli orderings are reported.
  const double cont_res = max_error_norm(cont, su2);
  r.info("continuous_residual_max", cont_res);
  double best = std::numeric_limits<double>::infinity();
  std::string best_word;
  const char *letters = "XYZ";
  for (int code = 0; code < 6 * 6 * 6 * 6; ++code) {
    std::vector<ControlSegment> segs;
    std::string word;
    int c = code;
    for (int k = 0; k < 4; ++k, c /= 6) {
      const int a = c % 6;
      const double sign = a < 3 ? 1.0 : -1.0;
      segs.push_back({pauli_string(std::string(1, letters[a % 3])) * (sign * u), pi / (2.0 * u)});
      word += (sign > 0 ? "+" : "-") + std::string(1, letters[a % 3]);
    }
    const double res = max_error_norm(PulseSchedule(2, u, segs), su2);
    if (res < best) {
      best = res;
      best_word = word;
    }
  }
  r.info("continuous_search_min_residual", best);
  r.notes.push_back(
      "continuous back-to-back pi pulses leave an O(T) first-order residual for every signed Pauli ordering; "
      "robustness holds for the discrete schedule {I, X, Y, Z}");
  json per_op = json::object();
  for (const char *p : {"X", "Y", "Z"}) per_op[p] = op_norm(first_order_error(cont, pauli_string(p)));
  r.details = {{"continuous_error_norms", per_op},
               {"search_space", "4 segments from {+-X, +-Y, +-Z}, each pi/(2 u_max)"},
               {"search_best_sequence", best_word},
               {"search_best_residual", best}};
  write_report(r, opts);
  return r;
}

ScenarioResult scenario_tetrahedron(const ScenarioOptions &opts) {
  ScenarioResult r;
  r.name = "tetrahedron";
  const double u = opts.u_max;
  const double t_star = tetra_time(u);
  const Vector psi0 = ket0();
  const char *labels[] = {"X", "Y", "Z"};

  // Tabulated axes and vertices.
  const auto axes = tetrahedron_table_axes();
  double axis_dev = 0.0;
  for (const auto &k : axes) axis_dev = std::max(axis_dev, std::abs(norm(k) - 1.0));
  r.at_most("table_axis_norm_deviation", axis_dev, 1e-12, kClosed);
  const auto table_x = tetrahedron_table_vertices();
  r.near("table_x3_norm_squared", dot(table_x[2], table_x[2]), 7.0 / 9.0, 1e-15, kClosed);
  r.info("table_x1_x2_inner", dot(table_x[0], table_x[1]));

  const PulseSchedule printed = tetrahedron_schedule(axes, u);
  r.near("total_time", printed.total_duration(), t_star, 1e-12 * t_star, kRef);
  r.near("total_time_rounded", printed.total_duration() * u, 3.8213, 5e-5, kRef);

  bool printed_ok = true;
  json printed_errors = json::object();
  for (const char *p : labels) {
    const double e = state_error(printed, pauli_string(p), psi0);
    printed_errors[p] = e;
    printed_ok = printed_ok && std::abs(e) <= 1e-6 * t_star;
    r.info(std::string("printed_state_error_") + p, e);
  }
  double printed_vertex_dev = 0.0;
  json printed_visits = json::array();
  for (int k = 0; k < 4; ++k) {
    const Vec3 b = bloch_vector(printed, k * t_star / 4.0, psi0);
    printed_visits.push_back(vec_json(b));
    printed_vertex_dev = std::max(printed_vertex_dev, distance(b, table_x[k]));
  }
  r.info("printed_table_vertex_max_deviation", printed_vertex_dev);

  // The intended x3 lies on both great circles generated by K2 and K3.
  const Vec3 on_both = normalized(cross(axes[1], axes[2]));
  const Vec3 candidate{-std::sqrt(6.0) / 3.0, 1.0 / std::sqrt(3.0), 0.0};
  const double cand_dev = std::min(distance(on_both, candidate),
                                   distance({-on_both[0], -on_both[1], -on_both[2]}, candidate));
  r.at_most("x3_candidate_great_circle_deviation", cand_dev, 1e-12, kOracle);

  // Repaired construction.
  const auto rep_x = tetrahedron_repaired_vertices();
  const auto rep_axes = tetrahedron_axes_from_vertices(rep_x);
  const PulseSchedule repaired = tetrahedron_schedule(rep_axes, u);
  r.near("repaired_total_time", repaired.total_duration(), t_star, 1e-12 * t_star, kRef);
  double rep_inner = -1.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) rep_inner = std::max(rep_inner, dot(rep_x[i], rep_x[j]));
  }
  r.near("repaired_max_pair_inner", rep_inner, -1.0 / 3.0, 1e-15, kClosed);
  r.near("repaired_last_axis_is_X", distance(rep_axes[3], {1.0, 0.0, 0.0}), 0.0, 1e-15, kClosed);
  json repaired_errors = json::object();
  for (const char *p : labels) {
    const double e = state_error(repaired, pauli_string(p), psi0);
    repaired_errors[p] = e;
    r.at_most(std::string("repaired_state_error_abs_") + p, std::abs(e), 1e-6 * t_star, kOracle);
  }
  double rep_vertex_dev = 0.0;
  for (int k = 0; k < 4; ++k) {
    rep_vertex_dev = std::max(rep_vertex_dev, distance(bloch_vector(repaired, k * t_star / 4.0, psi0), rep_x[k]));
  }
  r.at_most("repaired_vertex_max_deviation", rep_vertex_dev, 1e-6, kOracle);
  r.at_most("repaired_returns_to_x1", distance(bloch_vector(repaired, t_star, psi0), rep_x[0]), 1e-6, kOracle);

  json axes_json = json::array(), rep_axes_json = json::array(), rep_x_json = json::array(),
       table_x_json = json::array();
  for (int i = 0; i < 4; ++i) {
    axes_json.push_back(vec_json(axes[i]));
    rep_axes_json.push_back(vec_json(rep_axes[i]));
    rep_x_json.push_back(vec_json(rep_x[i]));
    table_x_json.push_back(vec_json(table_x[i]));
  }
  const json discrepancy = {
      {"printed_schedule_passes", printed_ok},
      {"printed_axes", axes_json},
      {"printed_state_errors", printed_errors},
      {"printed_vertices_visited", printed_visits},
      {"table_vertices", table_x_json},
      {"table_x3_norm_squared", dot(table_x[2], table_x[2])},
      {"x3_unit_candidate", vec_json(candidate)},
      {"x3_from_axis_great_circles", vec_json(on_both)},
      {"repaired_vertices", rep_x_json},
      {"repaired_axes", rep_axes_json},
      {"repaired_state_errors", repaired_errors},
      {"tolerance", 1e-6 * t_star}};
  r.details = {{"discrepancy", discrepancy}, {"used_vertex_set", printed_ok ? "table" : "repaired"}};
  if (!printed_ok) {
    r.notes.push_back("tabulated drive axes do not give vanishing state errors; the repaired regular tetrahedron "
                      "is used and both outcomes are reported");
  }
  add_json(r, opts, "discrepancy.json", discrepancy);
  emit_qubit_series(r, opts, repaired, "repaired");
  emit_qubit_series(r, opts, printed, "printed");
  write_report(r, opts);
  return r;
}

ScenarioResult scenario_ising_2q(const ScenarioOptions &opts) {
  ScenarioResult r;
  r.name = "ising-2q";
  const double u = opts.u_max;
  const NoiseSpace noise = NoiseSpace::from_paulis({"ZI", "IZ", "ZZ"});

  const ProjectorSearch search = find_projectors(noise, opts.seed);
  r.near("projection_bound", search.bound.value, 4.0, 0.0, kRef);
  const ProjectorFamily &fam = search.candidates[search.best].family;
  double off_diag = 0.0;
  for (const auto &p : fam.projectors()) {
    Matrix m = p.matrix();
    m.diagonal().setZero();
    off_diag = std::max(off_diag, max_abs_entry(m));
  }
  r.at_most("projector_off_diagonal", off_diag, 1e-12, kClosed);

  const auto discrete = MixedUnitarySchedule::from_paulis({"II", "XI", "IX", "XX"});
  const AnnihilationResult ann = annihilates(discrete, noise, 1e-12);
  r.at_most("discrete_residual_max", ann.max_residual, 1e-12, kClosed);
  double mixed_dev = 0.0;
  for (std::size_t s = 0; s < fam.size(); ++s) {
    const HermitianOp want = HermitianOp::identity(4) * (fam.ranks()[s] / 4.0);
    mixed_dev = std::max(mixed_dev, max_abs_entry((apply_channel(discrete, fam.projectors()[s]) - want).matrix()));
  }
  r.at_most("projector_image_deviation", mixed_dev, 1e-12, kClosed);

  // Continuous realization: local X drives at frequency indices 1 and 2.
  const NoiseGraph edge = NoiseGraph::path(2);
  const FrequencyAssignment fa = assign_frequencies(edge, u);
  const PulseSchedule cont = graph_product_schedule(fa);
  r.near("total_time", cont.total_duration(), 2.0 * pi / u, 1e-12 * 2.0 * pi / u, kRef);
  r.at_most("continuous_error_max", max_error_norm(cont, noise), 1e-8 * cont.total_duration(), kOracle);
  r.near("graph_time_bound", graph_time_bound(edge, u).value, 2.0 * pi / u, 1e-12 * 2.0 * pi / u, kRef);
  r.info("coherent_bound_full_su4", universal_coherent_bound(2).value);

  r.details = {{"projection_bound", io::to_json(search.bound)}, {"assignment", io::to_json(fa)}};
  write_report(r, opts);
  return r;
}

ScenarioResult scenario_chain(int n, bool closed, const ScenarioOptions &opts) {
  if (n < 2 || (closed && n < 3)) throw ValidationError("scenario_chain: too few sites");
  ScenarioResult r;
  r.name = closed ? (n % 2 ? "ring-odd" : "ring-even") : "chain-open";
  const double u = opts.u_loc;
  const NoiseGraph g = closed ? NoiseGraph::cycle(n) : NoiseGraph::path(n);
  const int expected = closed && n % 2 ? 3 : 2;

  const ColoringResult c = chromatic_number(g);
  r.near("chromatic_number", c.upper, expected, 0.0, closed && n % 2 ? kRef : kClosed);
  const FrequencyAssignment fa = assign_frequencies(g, u);
  r.near("total_time", fa.horizon, pi * expected / u, 1e-12 * pi * expected / u, kRef);
  r.near("graph_time_bound", graph_time_bound(g, u).value, fa.horizon, 1e-12 * fa.horizon, kClosed);

  const int max_index = *std::max_element(fa.indices.begin(), fa.indices.end());
  const GraphRobustnessReport rep = verify_graph_robustness(fa, g, 256 * max_index);
  r.at_most("max_first_moment", rep.max_first_moment, 1e-10, kClosed);
  r.at_most("max_second_moment", rep.max_second_moment, 1e-10, kClosed);
  r.at_most("max_speed_over_cap", rep.max_speed / rep.speed_cap, 1.0 + 1e-12, kClosed);
  if (rep.hilbert_max_error) r.at_most("hilbert_error_max", *rep.hilbert_max_error, 1e-8 * fa.horizon, kOracle);

  r.details = {{"n", n}, {"closed", closed}, {"assignment", io::to_json(fa)}, {"verification", io::to_json(rep)}};
  add_json(r, opts, "assignment.json", io::to_json(fa));
  write_report(r, opts);
  return r;
}

ScenarioResult scenario_complete(int n, const ScenarioOptions &opts) {
  if (n < 2 || n > 8) throw ValidationError("scenario_complete: n must be in [2, 8]");
  ScenarioResult r;
  r.name = "complete";
  const double u = opts.u_loc;
  const NoiseGraph g = NoiseGraph::complete(n);

  r.near("chromatic_number", chromatic_number(g).upper, n, 0.0, kRef);
  const FrequencyAssignment fa = assign_frequencies(g, u);
  r.near("total_time", fa.horizon, pi * n / u, 1e-12 * pi * n / u, kRef);
  r.near("clique_time_floor", clique_time_floor(n, u), fa.horizon, 1e-12 * fa.horizon, kClosed);

  const GraphRobustnessReport rep = verify_graph_robustness(fa, g, 256 * n);
  r.at_most("max_first_moment", rep.max_first_moment, 1e-10, kClosed);
  r.at_most("max_second_moment", rep.max_second_moment, 1e-10, kClosed);
  r.at_most("max_speed_over_cap", rep.max_speed / rep.speed_cap, 1.0 + 1e-12, kClosed);
  if (rep.hilbert_max_error) r.at_most("hilbert_error_max", *rep.hilbert_max_error, 1e-8 * fa.horizon, kOracle);

  // Pure modes saturate the Wirtinger-type inequality.
  double worst = 0.0;
  for (int k = 1; k <= n; ++k) {
    FourierSeries f;
    f.cos.assign(k, 0.0);
    f.sin.assign(k, 0.0);
    f.cos[k - 1] = 1.0;
    const PoincareResult pr = poincare_check(f, 2 * (k - 1), fa.horizon);
    worst = std::max(worst, std::abs(pr.lhs / pr.rhs - 1.0));
  }
  r.at_most("poincare_pure_mode_gap", worst, 1e-12, kClosed);

  r.details = {{"n", n}, {"assignment", io::to_json(fa)}, {"verification", io::to_json(rep)}};
  add_json(r, opts, "assignment.json", io::to_json(fa));
  write_report(r, opts);
  return r;
}

nlohmann::json to_json(const ScenarioResult &r) {
  json metrics = json::array();
  for (const auto &m : r.metrics) {
    json jm = {{"name", m.name}, {"value", m.value}, {"check", m.check}, {"passed", m.passed}};
    if (m.check != "info") {
      jm["target"] = m.target;
      jm["tol"] = m.tol;
      jm["basis"] = m.basis;
    }
    metrics.push_back(std::move(jm));
  }
  return {{"schema", io::kSchemaVersion}, {"scenario", r.name}, {"passed", r.passed}, {"metrics", metrics},
          {"notes", r.notes},           {"details", r.details}, {"artifacts", r.artifacts}};
}

}  // namespace robustctl
