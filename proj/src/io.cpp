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

#include "robustctl/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace robustctl::io {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void fail(const std::string &where, const std::string &msg) { throw ValidationError(where + ": " + msg); }

const json &field(const json &j, const char *key, const std::string &where) {
  if (!j.is_object()) fail(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

double number(const json &j, const std::string &where) {
  if (!j.is_number()) fail(where, "expected a number");
  return j.get<double>();
}

std::size_t positive_int(const json &j, const std::string &where) {
  if (!j.is_number_integer() || j.get<long long>() <= 0) fail(where, "expected a positive integer");
  return j.get<std::size_t>();
}

Complex complex_from_json(const json &j, const std::string &where) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    fail(where, "expected [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json complex_to_json(Complex c) { return json::array({c.real(), c.imag()}); }

}  // namespace

json to_json(const Matrix &m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"dim", m.rows()}, {"rows", rows}};
}

json to_json(const HermitianOp &a) { return to_json(a.matrix()); }
json to_json(const UnitaryOp &u) { return to_json(u.matrix()); }

Matrix matrix_from_json(const json &j, const std::string &where) {
  if (j.is_object() && j.contains("pauli")) {
    if (!j["pauli"].is_string()) fail(where + ".pauli", "expected a string");
    try {
      Matrix m = pauli_string(j["pauli"].get<std::string>()).matrix();
      if (j.contains("scale")) m *= number(j["scale"], where + ".scale");
      return m;
    } catch (const ValidationError &e) {
      fail(where + ".pauli", e.what());
    }
  }
  const std::size_t d = positive_int(field(j, "dim", where), where + ".dim");
  const json &rows = field(j, "rows", where);
  if (!rows.is_array() || rows.size() != d) fail(where + ".rows", "expected " + std::to_string(d) + " rows");
  Matrix m(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    const std::string wr = where + ".rows[" + std::to_string(r) + "]";
    if (!rows[r].is_array() || rows[r].size() != d) fail(wr, "expected " + std::to_string(d) + " entries");
    for (std::size_t c = 0; c < d; ++c) {
      m(r, c) = complex_from_json(rows[r][c], wr + "[" + std::to_string(c) + "]");
    }
  }
  return m;
}

HermitianOp hermitian_from_json(const json &j, const std::string &where) {
  try {
    return HermitianOp(matrix_from_json(j, where));
  } catch (const ValidationError &e) {
    const std::string msg = e.what();
    if (msg.rfind(where, 0) == 0) throw;
    fail(where, msg);
  }
}

UnitaryOp unitary_from_json(const json &j, const std::string &where) {
  try {
    return UnitaryOp(matrix_from_json(j, where));
  } catch (const ValidationError &e) {
    const std::string msg = e.what();
    if (msg.rfind(where, 0) == 0) throw;
    fail(where, msg);
  }
}

json vector_to_json(const Vector &v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

Vector vector_from_json(const json &j, const std::string &where) {
  if (!j.is_array() || j.empty()) fail(where, "expected a non-empty array of [re, im]");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(i) = complex_from_json(j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

json to_json(const PulseSchedule &s) {
  json segs = json::array();
  for (const auto &seg : s.segments()) segs.push_back({{"H", to_json(seg.generator)}, {"duration", seg.duration}});
  return {{"dim", s.dim()}, {"u_max", s.u_max()}, {"segments", segs}};
}

PulseSchedule schedule_from_json(const json &j) {
  const std::string where = "schedule";
  const std::size_t d = positive_int(field(j, "dim", where), where + ".dim");
  const double u = number(field(j, "u_max", where), where + ".u_max");
  const json &segs = field(j, "segments", where);
  if (!segs.is_array()) fail(where + ".segments", "expected an array");
  std::vector<ControlSegment> out;
  for (std::size_t k = 0; k < segs.size(); ++k) {
    const std::string ws = where + ".segments[" + std::to_string(k) + "]";
    HermitianOp h = hermitian_from_json(field(segs[k], "H", ws), ws + ".H");
    if (h.dim() != d) fail(ws + ".H", "dimension " + std::to_string(h.dim()) + " != " + std::to_string(d));
    out.push_back({std::move(h), number(field(segs[k], "duration", ws), ws + ".duration")});
  }
  try {
    return PulseSchedule(d, u, std::move(out));
  } catch (const ValidationError &e) {
    fail(where, e.what());
  }
}

NoiseInput noise_from_json(const json &j) {
  const std::string where = "noise";
  NoiseInput in;
  if (j.is_object() && j.contains("paulis")) {
    const json &p = j["paulis"];
    if (!p.is_array() || p.empty()) fail(where + ".paulis", "expected a non-empty array of strings");
    for (std::size_t i = 0; i < p.size(); ++i) {
      const std::string wi = where + ".paulis[" + std::to_string(i) + "]";
      if (!p[i].is_string()) fail(wi, "expected a string");
      try {
        in.elements.push_back(pauli_string(p[i].get<std::string>()));
      } catch (const ValidationError &e) {
        fail(wi, e.what());
      }
      in.labels.push_back(p[i].get<std::string>());
    }
  } else {
    const json &b = field(j, "basis", where);
    if (!b.is_array() || b.empty()) fail(where + ".basis", "expected a non-empty array of operators");
    for (std::size_t i = 0; i < b.size(); ++i) {
      const std::string wi = where + ".basis[" + std::to_string(i) + "]";
      in.elements.push_back(hermitian_from_json(b[i], wi));
      in.labels.push_back(b[i].is_object() && b[i].contains("pauli") && b[i]["pauli"].is_string()
                              ? b[i]["pauli"].get<std::string>()
                              : "V" + std::to_string(i));
    }
  }
  const std::size_t d = in.elements.front().dim();
  for (std::size_t i = 0; i < in.elements.size(); ++i) {
    if (in.elements[i].dim() != d) fail(where, "element " + std::to_string(i) + " has a different dimension");
  }
  try {
    in.space = NoiseSpace::span(d, in.elements);
  } catch (const ValidationError &e) {
    fail(where, e.what());
  }
  if (j.contains("psi0")) {
    in.psi0 = vector_from_json(j["psi0"], where + ".psi0");
    if (static_cast<std::size_t>(in.psi0->size()) != d) fail(where + ".psi0", "dimension mismatch");
  }
  return in;
}

json to_json(const MixedUnitarySchedule &s) {
  json entries = json::array();
  for (const auto &e : s.entries()) entries.push_back({{"p", e.p}, {"U", to_json(e.u)}});
  return {{"dim", s.dim()}, {"entries", entries}};
}

MixedUnitarySchedule mixed_schedule_from_json(const json &j) {
  const std::string where = "mixed_schedule";
  const std::size_t d = positive_int(field(j, "dim", where), where + ".dim");
  const json &entries = field(j, "entries", where);
  if (!entries.is_array()) fail(where + ".entries", "expected an array");
  std::vector<ScheduleEntry> out;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const std::string we = where + ".entries[" + std::to_string(k) + "]";
    const double p = number(field(entries[k], "p", we), we + ".p");
    UnitaryOp u = unitary_from_json(field(entries[k], "U", we), we + ".U");
    out.push_back({p, std::move(u)});
  }
  try {
    return MixedUnitarySchedule(d, std::move(out));
  } catch (const ValidationError &e) {
    fail(where, e.what());
  }
}

json to_json(const ErrorReport &r, const std::vector<std::string> &labels) {
  json errs = json::array();
  for (std::size_t i = 0; i < r.errors.size(); ++i) {
    errs.push_back({{"label", i < labels.size() ? labels[i] : "V" + std::to_string(i)},
                    {"norm", r.norms[i]},
                    {"E", to_json(r.errors[i])}});
  }
  return {{"errors", errs},
          {"worst_norm", r.worst_norm},
          {"total_duration", r.total_duration},
          {"warnings", r.warnings}};
}

json to_json(const CorrectorPlan &p) {
  json diag = json::array();
  for (const auto &ax : p.diagonal_axes) diag.push_back({{"K", to_json(ax.k)}, {"beta", ax.beta}});
  json out = {{"V", to_json(p.v)},
              {"target", to_json(p.target)},
              {"alpha", p.alpha},
              {"shift", p.shift},
              {"gamma1", p.gamma1},
              {"diagonal_axes", diag},
              {"axis_count", p.axis_count()},
              {"residual", p.residual}};
  out["off_diagonal_axis"] = p.off_diagonal_axis ? to_json(*p.off_diagonal_axis) : json(nullptr);
  return out;
}

json to_json(const BoundReport &b) {
  json out = {{"kind", b.kind}, {"value", b.value}, {"witness", b.witness}};
  out["upper"] = b.upper ? json(*b.upper) : json(nullptr);
  return out;
}

json to_json(const FrequencyAssignment &fa) {
  json freqs = json::object();
  for (std::size_t i = 0; i < fa.indices.size(); ++i) freqs[std::to_string(i)] = fa.indices[i];
  return {{"T", fa.horizon}, {"omega", fa.omega}, {"u_loc", fa.u_loc}, {"frequencies", freqs}};
}

json to_json(const GraphRobustnessReport &r) {
  json edges = json::array();
  for (const auto &e : r.edges) edges.push_back({{"i", e.i}, {"j", e.j}, {"max_entry", e.max_entry}});
  json out = {{"max_first_moment", r.max_first_moment},
              {"max_second_moment", r.max_second_moment},
              {"edges", edges},
              {"max_speed", r.max_speed},
              {"speed_cap", r.speed_cap},
              {"passed", r.passed}};
  out["hilbert_max_error"] = r.hilbert_max_error ? json(*r.hilbert_max_error) : json(nullptr);
  return out;
}

json load_json_file(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError(path.string() + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ValidationError(path.string() + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
                          e.what());
  }
}

void write_file_atomic(const fs::path &path, const std::string &content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error(tmp.string() + ": cannot open for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error(tmp.string() + ": write failed");
  }
  fs::rename(tmp, path);
}

void write_json_atomic(const fs::path &path, const json &j) { write_file_atomic(path, j.dump(2) + "\n"); }

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv_atomic(const fs::path &path, const std::vector<std::string> &header,
                      const std::vector<std::vector<double>> &rows) {
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) out += (i ? "," : "") + header[i];
  out += "\n";
  for (const auto &row : rows) {
    if (row.size() != header.size()) throw std::logic_error("write_csv_atomic: row width mismatch");
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + format_number(row[i]);
    out += "\n";
  }
  write_file_atomic(path, out);
}

}  // namespace robustctl::io
