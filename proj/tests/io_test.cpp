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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "robustctl/errors.hpp"

namespace robustctl {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

fs::path scratch(const std::string &name) {
  fs::path p = fs::temp_directory_path() / ("robustctl_io_test_" + std::to_string(::getpid())) / name;
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path &p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(IoOperators, MatrixRoundTripIsBitExact) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  Matrix m(3, 3);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) m(r, c) = Complex(g(rng), g(rng));
  }
  const Matrix back = io::matrix_from_json(json::parse(io::to_json(m).dump()), "m");
  EXPECT_EQ(max_abs_entry(back - m), 0.0);
}

TEST(IoOperators, PauliShorthandWithScale) {
  const HermitianOp h = io::hermitian_from_json(json{{"pauli", "XZ"}, {"scale", 0.5}}, "H");
  EXPECT_EQ(max_abs_entry(h.matrix() - (pauli_string("XZ") * 0.5).matrix()), 0.0);
}

TEST(IoOperators, ErrorsNameTheField) {
  try {
    io::matrix_from_json(json{{"dim", 2}, {"rows", json::array({json::array({json::array({1.0, 0.0})})})}}, "seg[3].H");
    FAIL() << "expected ValidationError";
  } catch (const ValidationError &e) {
    EXPECT_EQ(std::string(e.what()).rfind("seg[3].H", 0), 0u) << e.what();
  }
  EXPECT_THROW(io::hermitian_from_json(json{{"pauli", "Q"}}, "H"), ValidationError);
  // Non-Hermitian rows.
  const json nh = {{"dim", 2},
                   {"rows", json::array({json::array({json::array({0.0, 0.0}), json::array({1.0, 0.0})}),
                                         json::array({json::array({0.0, 0.0}), json::array({0.0, 0.0})})})}};
  EXPECT_THROW(io::hermitian_from_json(nh, "H"), ValidationError);
  EXPECT_THROW(io::unitary_from_json(nh, "U"), ValidationError);
}

TEST(IoSchedule, RoundTripPreservesPropagator) {
  const PulseSchedule s(2, 1.0, {{pauli_string("X"), 0.3}, {pauli_string("Y") * -0.7, 1.1}});
  const PulseSchedule back = io::schedule_from_json(json::parse(io::to_json(s).dump()));
  ASSERT_EQ(back.segments().size(), 2u);
  EXPECT_EQ(back.segments()[1].duration, 1.1);
  EXPECT_EQ(max_abs_entry(propagator(back).matrix() - propagator(s).matrix()), 0.0);
}

TEST(IoSchedule, RejectsMissingAndNegativeFields) {
  EXPECT_THROW(io::schedule_from_json(json{{"dim", 2}, {"segments", json::array()}}), ValidationError);
  const json neg = {{"dim", 2},
                    {"u_max", 1.0},
                    {"segments", json::array({{{"H", {{"pauli", "X"}}}, {"duration", -1.0}}})}};
  EXPECT_THROW(io::schedule_from_json(neg), ValidationError);
}

TEST(IoNoise, PaulisAndBasisForms) {
  const io::NoiseInput a = io::noise_from_json(json{{"paulis", {"ZI", "IZ"}}});
  EXPECT_EQ(a.space.size(), 2u);
  ASSERT_EQ(a.labels.size(), 2u);
  EXPECT_EQ(a.labels[0], "ZI");
  EXPECT_FALSE(a.psi0.has_value());

  const json b = {{"basis", json::array({{{"pauli", "Z"}}})}, {"psi0", json::array({json::array({1.0, 0.0}), json::array({0.0, 0.0})})}};
  const io::NoiseInput nb = io::noise_from_json(b);
  EXPECT_EQ(nb.space.size(), 1u);
  ASSERT_TRUE(nb.psi0.has_value());
  EXPECT_EQ(nb.psi0->size(), 2);
}

TEST(IoMixed, RoundTrip) {
  const auto s = MixedUnitarySchedule::from_paulis({"I", "X", "Y", "Z"});
  const auto back = io::mixed_schedule_from_json(json::parse(io::to_json(s).dump()));
  EXPECT_EQ(back.size(), 4u);
  EXPECT_TRUE(annihilates(back, NoiseSpace::full_su(1), 1e-12).annihilated);
}

TEST(IoReports, BoundAndAssignmentFields) {
  const json b = io::to_json(coherent_bound(2));
  EXPECT_EQ(b["value"].get<double>(), 4.0);
  EXPECT_TRUE(b.contains("kind"));
  EXPECT_TRUE(b["upper"].is_null());

  const json fa = io::to_json(assign_frequencies(NoiseGraph::cycle(5), 1.0));
  EXPECT_NEAR(fa["T"].get<double>(), 3.0 * std::numbers::pi, 1e-15);
  EXPECT_EQ(fa["frequencies"].size(), 5u);
  EXPECT_EQ(fa["frequencies"]["0"].get<int>(), 1);
}

TEST(IoFiles, AtomicWriteCreatesDirectoriesAndLeavesNoTemp) {
  const fs::path dir = scratch("atomic");
  const fs::path f = dir / "nested" / "a.json";
  io::write_json_atomic(f, json{{"k", 1}});
  EXPECT_TRUE(fs::exists(f));
  int entries = 0;
  for (const auto &e : fs::directory_iterator(f.parent_path())) {
    (void)e;
    ++entries;
  }
  EXPECT_EQ(entries, 1);
  EXPECT_EQ(io::load_json_file(f)["k"].get<int>(), 1);
  io::write_json_atomic(f, json{{"k", 2}});
  EXPECT_EQ(io::load_json_file(f)["k"].get<int>(), 2);
}

TEST(IoFiles, ParseErrorsReportLineAndColumn) {
  const fs::path f = scratch("bad") / "bad.json";
  io::write_file_atomic(f, "{\n  \"a\": 1,\n  \"b\": ]\n}\n");
  try {
    io::load_json_file(f);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError &e) {
    EXPECT_NE(std::string(e.what()).find("bad.json:3:"), std::string::npos) << e.what();
  }
  EXPECT_THROW(io::load_json_file(scratch("none") / "missing.json"), ValidationError);
}

TEST(IoFiles, CsvUsesSeventeenDigits) {
  const fs::path f = scratch("csv") / "x.csv";
  io::write_csv_atomic(f, {"t", "v"}, {{0.1, 1.0 / 3.0}});
  const std::string text = slurp(f);
  EXPECT_EQ(text, "t,v\n0.10000000000000001,0.33333333333333331\n");
  EXPECT_EQ(std::stod(io::format_number(1.0 / 3.0)), 1.0 / 3.0);
  EXPECT_THROW(io::write_csv_atomic(f, {"t"}, {{1.0, 2.0}}), std::logic_error);
}

}  // namespace
}  // namespace robustctl
