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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "robustctl/dynamics.hpp"
#include "robustctl/graphnoise.hpp"
#include "robustctl/robustify.hpp"
#include "robustctl/schedules.hpp"

namespace robustctl::io {

using nlohmann::json;

/// Version tag written into every report; bump on any field change.
inline constexpr const char *kSchemaVersion = "robustctl/1";

// Operators: {"dim": d, "rows": [[[re, im], ...], ...]} or {"pauli": "XZ"}.
json to_json(const Matrix &m);
json to_json(const HermitianOp &a);
json to_json(const UnitaryOp &u);
Matrix matrix_from_json(const json &j, const std::string &where);
HermitianOp hermitian_from_json(const json &j, const std::string &where);
UnitaryOp unitary_from_json(const json &j, const std::string &where);

json vector_to_json(const Vector &v);
Vector vector_from_json(const json &j, const std::string &where);

// {"dim", "u_max", "segments": [{"H": op, "duration": t}]}
json to_json(const PulseSchedule &s);
PulseSchedule schedule_from_json(const json &j);

struct NoiseInput {
  NoiseSpace space;
  /// Elements as given, before orthonormalization.
  std::vector<HermitianOp> elements;
  std::vector<std::string> labels;
  std::optional<Vector> psi0;
};
// {"basis": [op, ...]} or {"paulis": ["ZI", ...]}, optional "psi0".
NoiseInput noise_from_json(const json &j);

// {"dim", "entries": [{"p": p, "U": op}]}
json to_json(const MixedUnitarySchedule &s);
MixedUnitarySchedule mixed_schedule_from_json(const json &j);

json to_json(const ErrorReport &r, const std::vector<std::string> &labels);
json to_json(const CorrectorPlan &p);
json to_json(const BoundReport &b);
json to_json(const FrequencyAssignment &fa);
json to_json(const GraphRobustnessReport &r);

/// Parses a file, reporting "path:line:col: message" on syntax errors.
json load_json_file(const std::filesystem::path &path);

/// Writes through a temporary sibling file and renames it into place.
void write_file_atomic(const std::filesystem::path &path, const std::string &content);
void write_json_atomic(const std::filesystem::path &path, const json &j);

/// Rows of numbers printed with %.17g.
void write_csv_atomic(const std::filesystem::path &path, const std::vector<std::string> &header,
                      const std::vector<std::vector<double>> &rows);

std::string format_number(double x);

}  // namespace robustctl::io
