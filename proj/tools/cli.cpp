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

#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "robustctl/errors.hpp"
#include "robustctl/io.hpp"
#include "robustctl/robustify.hpp"
#include "robustctl/scenarios.hpp"

namespace robustctl::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunConfig {
  std::string in;
  std::string noise;
  std::string noise_op;
  std::string flip;
  std::string graph;
  std::string out;
  std::string kind;
  std::string scenario;
  std::optional<double> tol;
  std::uint64_t seed = ScenarioOptions{}.seed;
  double umax = 1.0;
  double uloc = 1.0;
  int q = 0;
  int qubits = 0;
  int points = 401;
  bool search_order = false;
};

/// ROBUSTCTL_OUT wins over --out.
std::optional<fs::path> out_dir(const RunConfig &c) {
  if (const char *e = std::getenv("ROBUSTCTL_OUT"); e != nullptr && *e != '\0') return fs::path(e);
  if (!c.out.empty()) return fs::path(c.out);
  return std::nullopt;
}

fs::path out_dir_or_default(const RunConfig &c) { return out_dir(c).value_or("robustctl-out"); }

void require(const std::string &value, const char *flag, const char *command) {
  if (value.empty()) throw ValidationError(std::string(command) + ": " + flag + " is required");
}

void forbid(bool given, const char *flag, const std::string &context) {
  if (given) throw ValidationError(context + ": " + flag + " does not apply");
}

/// A JSON operator file, or else a Pauli label.
HermitianOp op_arg(const std::string &s, const std::string &where) {
  if (fs::is_regular_file(s)) return io::hermitian_from_json(io::load_json_file(s), where);
  try {
    return pauli_string(s);
  } catch (const ValidationError &) {
    throw ValidationError(where + ": '" + s + "' is neither a readable file nor a Pauli label");
  }
}

/// The single noise operator for robustify and schedule-time bounds.
HermitianOp single_noise(const RunConfig &c, const char *command) {
  if (!c.noise_op.empty() && !c.noise.empty()) {
    throw ValidationError(std::string(command) + ": give either --noise or --noise-op, not both");
  }
  if (!c.noise_op.empty()) return op_arg(c.noise_op, "--noise-op");
  require(c.noise, "--noise or --noise-op", command);
  const io::NoiseInput n = io::noise_from_json(io::load_json_file(c.noise));
  if (n.elements.size() != 1) throw ValidationError(std::string(command) + ": noise must contain exactly one operator");
  return n.elements.front();
}

std::string file_label(const std::string &label) {
  std::string s = label;
  for (char &ch : s) {
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_' && ch != '-') ch = '_';
  }
  return s;
}

int cmd_simulate(const RunConfig &c, std::ostream &out) {
  require(c.in, "--in", "simulate");
  require(c.noise, "--noise", "simulate");
  const PulseSchedule s = io::schedule_from_json(io::load_json_file(c.in));
  const io::NoiseInput noise = io::noise_from_json(io::load_json_file(c.noise));
  if (noise.space.dim() != s.dim()) throw ValidationError("simulate: schedule and noise dimensions differ");

  // Errors of the operators as given, not of the orthonormalized basis.
  ErrorReport rep;
  rep.total_duration = s.total_duration();
  for (const auto &v : noise.elements) {
    rep.errors.push_back(first_order_error(s, v));
    rep.norms.push_back(op_norm(rep.errors.back()));
    rep.worst_norm = std::max(rep.worst_norm, rep.norms.back());
  }
  json report = io::to_json(rep, noise.labels);
  report["schema"] = io::kSchemaVersion;
  report["command"] = "simulate";

  json speed = json::array();
  for (std::size_t i = 0; i < noise.elements.size(); ++i) {
    const SpeedCertificate sc = speed_certificate(s, noise.elements[i], std::max(2, c.points));
    speed.push_back({{"label", noise.labels[i]},
                     {"finite_difference_max", sc.finite_difference_max},
                     {"analytic_max", sc.analytic_max},
                     {"bound", sc.bound}});
  }
  report["speed"] = speed;

  std::vector<HermitianOp> gens;
  for (const auto &seg : s.segments()) gens.push_back(seg.generator);
  const FeasibilityResult feas = fixed_vector_check(gens, noise.space);
  report["feasibility"] = {{"feasible", feas.feasible}, {"fixed_dimension", feas.fixed_dimension}};

  if (noise.psi0) {
    json st = json::object();
    for (std::size_t i = 0; i < noise.elements.size(); ++i) {
      st[noise.labels[i]] = state_error(s, noise.elements[i], *noise.psi0);
    }
    report["state_errors"] = st;
  }
  const bool passed = !c.tol || rep.worst_norm <= *c.tol;
  report["tolerance"] = c.tol ? json(*c.tol) : json(nullptr);
  report["passed"] = passed;

  const fs::path dir = out_dir_or_default(c);
  json files = json::array();
  for (std::size_t i = 0; i < noise.elements.size(); ++i) {
    const Vector *psi = noise.psi0 ? &*noise.psi0 : nullptr;
    const auto series = susceptibility_series(s, noise.elements[i], std::max(2, c.points), psi);
    std::vector<std::string> header{"t", "norm"};
    if (psi) header.push_back("state");
    std::vector<std::vector<double>> rows;
    for (const auto &p : series) {
      rows.push_back({p.t, p.norm});
      if (psi) rows.back().push_back(*p.state_value);
    }
    const std::string name = "susceptibility_" + file_label(noise.labels[i]) + ".csv";
    io::write_csv_atomic(dir / name, header, rows);
    files.push_back(name);
  }
  report["artifacts"] = files;
  io::write_json_atomic(dir / "report.json", report);

  out << (passed ? "PASS" : "FAIL") << " simulate worst_norm=" << io::format_number(rep.worst_norm)
      << " T=" << io::format_number(rep.total_duration) << " report=" << (dir / "report.json").string() << "\n";
  return passed ? kExitPass : kExitVerification;
}

int cmd_robustify(const RunConfig &c, std::ostream &out) {
  require(c.in, "--in", "robustify");
  require(c.flip, "--flip", "robustify");
  const PulseSchedule s = io::schedule_from_json(io::load_json_file(c.in));
  const HermitianOp v = single_noise(c, "robustify");
  const HermitianOp r_op = op_arg(c.flip, "--flip");
  const FlipOperator r(r_op, v);
  const RobustGate g = robustify_gate(s, v, r);

  const bool passed = !c.tol || g.error_norm <= *c.tol;
  const json report = {{"schema", io::kSchemaVersion},
                       {"command", "robustify"},
                       {"base_duration", g.base_duration},
                       {"total_duration", g.schedule.total_duration()},
                       {"error_norm", g.error_norm},
                       {"overlap", g.overlap},
                       {"tolerance", c.tol ? json(*c.tol) : json(nullptr)},
                       {"passed", passed}};
  const fs::path dir = out_dir_or_default(c);
  io::write_json_atomic(dir / "schedule.json", io::to_json(g.schedule));
  io::write_json_atomic(dir / "report.json", report);
  out << (passed ? "PASS" : "FAIL") << " robustify T_out=" << io::format_number(g.schedule.total_duration())
      << " error_norm=" << io::format_number(g.error_norm) << " schedule=" << (dir / "schedule.json").string()
      << "\n";
  return passed ? kExitPass : kExitVerification;
}

int cmd_bounds(const RunConfig &c, std::ostream &out) {
  const std::string ctx = "bounds --kind " + c.kind;
  const bool has_noise = !c.noise.empty() || !c.noise_op.empty();
  const bool has_graph = !c.graph.empty();
  BoundReport b;
  if (c.kind == "single") {
    forbid(!c.in.empty() || has_noise || has_graph || c.q || c.qubits, "input files, --q or --qubits", ctx);
    b = single_noise_time_floor(c.umax);
  } else if (c.kind == "coherent") {
    forbid(!c.in.empty() || has_noise || has_graph, "input files", ctx);
    if ((c.q > 0) == (c.qubits > 0)) throw ValidationError(ctx + ": give exactly one of --q or --qubits");
    b = c.q > 0 ? coherent_bound(c.q) : universal_coherent_bound(c.qubits);
  } else if (c.kind == "projection") {
    forbid(!c.in.empty() || has_graph || !c.noise_op.empty() || c.q || c.qubits, "--in, --graph, --noise-op, --q or --qubits", ctx);
    require(c.noise, "--noise", "bounds projection");
    b = find_projectors(io::noise_from_json(io::load_json_file(c.noise)).space, c.seed).bound;
  } else if (c.kind == "graph") {
    forbid(!c.in.empty() || has_noise || c.q || c.qubits, "--in, noise, --q or --qubits", ctx);
    require(c.graph, "--graph", "bounds graph");
    std::ifstream in(c.graph);
    if (!in) throw ValidationError(c.graph + ": cannot open file");
    const NoiseGraph g = [&] {
      try {
        return read_edge_list(in);
      } catch (const ValidationError &e) {
        throw ValidationError(c.graph + ": " + e.what());
      }
    }();
    b = graph_time_bound(g, c.uloc);
  } else if (c.kind == "schedule-time") {
    forbid(has_graph || c.q || c.qubits, "--graph, --q or --qubits", ctx);
    require(c.in, "--in", "bounds schedule-time");
    const MixedUnitarySchedule sch = io::mixed_schedule_from_json(io::load_json_file(c.in));
    b = schedule_time_bound(sch, single_noise(c, "bounds schedule-time"), c.umax, c.search_order);
  } else {
    throw ValidationError("bounds: unknown kind '" + c.kind + "'");
  }
  json j = io::to_json(b);
  j["schema"] = io::kSchemaVersion;
  if (const auto dir = out_dir(c)) io::write_json_atomic(*dir / "bound.json", j);
  out << j.dump(2) << "\n";
  return kExitPass;
}

int cmd_scenario(const RunConfig &c, std::ostream &out) {
  require(c.scenario, "--scenario", "scenario");
  std::vector<std::string> names;
  if (c.scenario == "all") {
    names = scenario_names();
  } else {
    // Validate before running anything.
    const auto &known = scenario_names();
    if (std::find(known.begin(), known.end(), c.scenario) == known.end()) run_scenario(c.scenario);
    names = {c.scenario};
  }
  ScenarioOptions opts;
  opts.u_max = c.umax;
  opts.u_loc = c.uloc;
  opts.seed = c.seed;
  opts.out_dir = out_dir_or_default(c);

  bool all_passed = true;
  json summary = json::array();
  for (const auto &n : names) {
    const ScenarioResult r = run_scenario(n, opts);
    all_passed = all_passed && r.passed;
    json failed = json::array();
    for (const auto &m : r.metrics) {
      if (!m.passed) failed.push_back(m.name);
    }
    summary.push_back({{"scenario", n}, {"passed", r.passed}, {"failed_metrics", failed}});
    out << (r.passed ? "PASS " : "FAIL ") << n;
    if (!failed.empty()) out << " (" << failed.size() << " failed: " << failed.dump() << ")";
    out << "\n";
  }
  io::write_json_atomic(*opts.out_dir / "summary.json",
                        {{"schema", io::kSchemaVersion}, {"passed", all_passed}, {"scenarios", summary}});
  return all_passed ? kExitPass : kExitVerification;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"robustctl: first-order robust control schedules and their lower bounds"};
  app.require_subcommand(1);
  RunConfig c;

  auto add_out = [&](CLI::App *sub) {
    sub->add_option("--out", c.out, "Output directory (ROBUSTCTL_OUT overrides)");
  };
  auto add_tol = [&](CLI::App *sub) {
    sub->add_option("--tol", c.tol, "Pass threshold on the error norm")->check(CLI::PositiveNumber);
  };

  CLI::App *sim = app.add_subcommand("simulate", "First-order error report and susceptibility series");
  sim->add_option("--in", c.in, "Schedule JSON");
  sim->add_option("--noise", c.noise, "Noise JSON");
  sim->add_option("--points", c.points, "Samples per series")->check(CLI::Range(2, 1000000));
  add_out(sim);
  add_tol(sim);

  CLI::App *rob = app.add_subcommand("robustify", "First-order robust realization of a gate");
  rob->add_option("--in", c.in, "Schedule JSON");
  rob->add_option("--noise", c.noise, "Noise JSON holding one operator");
  rob->add_option("--noise-op", c.noise_op, "Noise operator: Pauli label or operator JSON");
  rob->add_option("--flip", c.flip, "Flip operator R: Pauli label or operator JSON");
  add_out(rob);
  add_tol(rob);

  CLI::App *bnd = app.add_subcommand("bounds", "Lower bounds on time or schedule length");
  bnd->add_option("--kind", c.kind, "Bound kind")
      ->required()
      ->check(CLI::IsMember({"single", "coherent", "projection", "graph", "schedule-time"}));
  bnd->add_option("--in", c.in, "Mixed-unitary schedule JSON (schedule-time)");
  bnd->add_option("--noise", c.noise, "Noise JSON");
  bnd->add_option("--noise-op", c.noise_op, "Noise operator: Pauli label or operator JSON");
  bnd->add_option("--graph", c.graph, "Edge list (graph)");
  bnd->add_option("--q", c.q, "Local dimension (coherent)")->check(CLI::PositiveNumber);
  bnd->add_option("--qubits", c.qubits, "Qubit count for su(2^n) (coherent)")->check(CLI::PositiveNumber);
  bnd->add_option("--seed", c.seed, "RNG seed (projection)");
  bnd->add_flag("--search-order", c.search_order, "Also search the best visiting order (schedule-time)");
  add_out(bnd);

  CLI::App *scn = app.add_subcommand("scenario", "Run a named scenario or all of them");
  scn->add_option("--scenario,name", c.scenario, "Scenario name or 'all'");
  scn->add_option("--seed", c.seed, "RNG seed");
  add_out(scn);

  for (CLI::App *sub : {bnd, scn}) {
    sub->add_option("--uloc", c.uloc, "Local amplitude cap")->check(CLI::PositiveNumber);
    sub->add_option("--umax", c.umax, "Global amplitude cap")->check(CLI::PositiveNumber);
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*sim) return cmd_simulate(c, out);
    if (*rob) return cmd_robustify(c, out);
    if (*bnd) return cmd_bounds(c, out);
    return cmd_scenario(c, out);
  } catch (const ValidationError &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedError &e) {
    err << "error: unsupported: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConstructionError &e) {
    err << "verification failed: " << e.what() << " (residual " << io::format_number(e.primary_residual())
        << ")\n";
    return kExitVerification;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitVerification;
  }
}

}  // namespace robustctl::cli
