// Copyright 2026 The vqsm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

#include <gtest/gtest.h>

#include "vqsm/experiments/experiments.hpp"

using namespace vqsm;
using namespace vqsm::experiments;

namespace {

ExperimentSpec small_spec(Kind k) {
  ExperimentSpec s;
  s.kind = k;
  s.geometry.n_atoms = 4;
  s.geometry.d_min = 1.0;
  s.geometry.d_max = 1.5;
  s.geometry.d_step = 0.5;
  s.trial = engine::TrialSource::exact();
  s.iterations = 3;
  s.restarts = 1;
  return s;
}

std::size_t column(const Table& t, const std::string& name) {
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    if (t.columns[i] == name) return i;
  ADD_FAILURE() << "no column " << name;
  return 0;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(VQSM_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

TEST(Geometry, DistanceGrid) {
  GeometryTemplate g;
  g.d_min = 0.5;
  g.d_max = 1.0;
  g.d_step = 0.1;
  const auto d = g.distances();
  ASSERT_EQ(d.size(), 6u);
  EXPECT_NEAR(d.back(), 1.0, 1e-12);
  g.d_max = 0.5;
  EXPECT_EQ(g.distances().size(), 1u);
}

TEST(Spec, ValidationRejectsBadInput) {
  auto s = small_spec(Kind::Dissociation);
  EXPECT_NO_THROW(s.validate());
  auto bad = s;
  bad.geometry.d_step = -1.0;
  EXPECT_THROW(bad.validate(), SpecError);
  bad = s;
  bad.geometry.shape = "star";
  EXPECT_THROW(bad.validate(), SpecError);
  bad = s;
  bad.restarts = 0;
  EXPECT_THROW(bad.validate(), SpecError);
  bad = s;
  bad.algorithm = engine::Algorithm::IVQE;
  bad.cost = engine::CostKind::TriDiag;
  EXPECT_THROW(bad.validate(), SpecError);
  EXPECT_THROW(kind_from_string("bogus"), SpecError);
  EXPECT_THROW(ExperimentSpec::from_json(nlohmann::json::parse(R"({"geometry": {}})")), SpecError);
}

TEST(Spec, JsonRoundTrip) {
  auto s = small_spec(Kind::Stochastic);
  s.geometry.shape = "ring";
  s.layers = {1, 2, 3};
  s.seed = 777;
  s.cost = engine::CostKind::Gain;
  s.out = "x.csv";
  const auto back = ExperimentSpec::from_json(s.to_json());
  EXPECT_EQ(back.to_json(), s.to_json());
  EXPECT_EQ(back.kind, Kind::Stochastic);
  EXPECT_EQ(back.layers, s.layers);
  for (auto k : {Kind::Dissociation, Kind::LayerScan, Kind::IterationScan, Kind::Stochastic,
                 Kind::ChargeGap, Kind::StGap, Kind::Resources})
    EXPECT_EQ(kind_from_string(to_string(k)), k);
}

TEST(Seeds, RowSeedsAreDistinctAndStable) {
  EXPECT_EQ(row_seed(1, 3), row_seed(1, 3));
  EXPECT_NE(row_seed(1, 3), row_seed(1, 4));
  EXPECT_NE(row_seed(1, 3), row_seed(2, 3));
  EXPECT_EQ(small_spec(Kind::Dissociation).run_config(99).optimizer.seed, 99u);
}

TEST(Table, CsvFormat) {
  Table t{{"a", "b"}, {{1.0, 0.1}, {2.5, -3e-9}}};
  EXPECT_EQ(t.to_csv(), "a,b\n1,0.1\n2.5,-3e-09\n");
  const auto gp = gnuplot_template(t, "t.csv");
  EXPECT_NE(gp.find("t.csv"), std::string::npos);
}

TEST(Commands, DissociationColumnsAndLimits) {
  const auto t = cmd_dissociation(small_spec(Kind::Dissociation));
  ASSERT_EQ(t.rows.size(), 2u);
  const auto csv = t.to_csv();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "d,E_HF,E_FCI,E_n0,E_n1,E_n2,E_n3,fidelity");
  for (const auto& r : t.rows) {
    EXPECT_EQ(r[column(t, "E_n0")], r[column(t, "E_HF")]);
    EXPECT_LE(r[column(t, "E_n3")], r[column(t, "E_n1")] + 1e-12);
    EXPECT_GE(r[column(t, "E_n3")], r[column(t, "E_FCI")] - 1e-10);
  }
}

TEST(Commands, RerunsAreByteIdentical) {
  auto s = small_spec(Kind::Dissociation);
  s.geometry.n_atoms = 2;
  s.trial = engine::TrialSource::hea(1);
  s.restarts = 2;
  s.iterations = 2;
  EXPECT_EQ(cmd_dissociation(s).to_csv(), cmd_dissociation(s).to_csv());
}

TEST(Commands, IterationScanConvergesWithExactTrials) {
  auto s = small_spec(Kind::IterationScan);
  s.iterations = 20;
  s.eps_w = s.eps_e = 1e-12;
  const auto t = cmd_iteration_scan(s);
  const auto de = column(t, "dE"), lz = column(t, "dE_lanczos");
  for (const auto& r : t.rows) {
    if (r[column(t, "n")] == 20.0) { EXPECT_LT(r[de], 1e-8); }
    EXPECT_NEAR(r[de], r[lz], 1e-7);
  }
}

TEST(Commands, ChargeGapUsesTheFciCombination) {
  auto s = small_spec(Kind::ChargeGap);
  s.geometry.d_max = 1.0;
  s.iterations = 12;
  s.eps_w = s.eps_e = 1e-12;
  const auto t = cmd_charge_gap(s);
  ASSERT_EQ(t.rows.size(), 12u);
  const auto& r = t.rows.back();
  EXPECT_NEAR(r[column(t, "gap")], r[column(t, "gap_fci")], 1e-7);
  EXPECT_GT(r[column(t, "gap_fci")], 0.0);
}

TEST(Commands, SingletTripletGap) {
  auto s = small_spec(Kind::StGap);
  s.geometry.d_min = s.geometry.d_max = 2.0;
  s.iterations = 10;
  s.eps_w = s.eps_e = 1e-12;
  const auto t = cmd_st_gap(s);
  const auto& r = t.rows.back();
  EXPECT_NEAR(r[column(t, "gap")], r[column(t, "gap_fci")], 1e-7);
  EXPECT_GT(r[column(t, "gap_fci")], 0.0);
  auto odd = s;
  odd.geometry.n_atoms = 3;
  EXPECT_THROW(cmd_st_gap(odd), SpecError);
}

TEST(Commands, Resources) {
  auto s = small_spec(Kind::Resources);
  s.layers = {1, 2};
  s.qubits = {8, 12};
  const auto j = cmd_resources(s);
  ASSERT_EQ(j["grid"].size(), 4u);
  EXPECT_EQ(j["grid"][0]["cnot_native"], 7);
  EXPECT_EQ(j["entangler"], "linear");
  EXPECT_THROW(run_table(s), SpecError);
}

TEST(Outputs, WritesCsvSidecarAndPlotScript) {
  const auto dir = std::filesystem::temp_directory_path() / "vqsm_test_outputs";
  std::filesystem::create_directories(dir);
  auto s = small_spec(Kind::Dissociation);
  s.geometry.n_atoms = 2;
  s.geometry.d_max = 1.0;
  s.out = (dir / "h2.csv").string();
  const auto t = run_table(s);
  write_outputs(s, t);
  EXPECT_EQ(slurp(s.out), t.to_csv());
  const auto side = nlohmann::json::parse(slurp(s.out + ".json"));
  EXPECT_EQ(side["spec"], s.to_json());
  EXPECT_TRUE(std::filesystem::exists(s.out + ".gp"));
  std::filesystem::remove_all(dir);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("resources --qubits 8 --layers 1,2"), 0);
  EXPECT_EQ(run_cli("dissociation --d-step -1"), 2);
  EXPECT_EQ(run_cli("dissociation --geometry star"), 2);
  EXPECT_EQ(run_cli("no-such-command"), 2);
  EXPECT_EQ(run_cli("fcidump-import --in /nonexistent/file"), 2);
}

TEST(Cli, FcidumpRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "vqsm_test_cli";
  std::filesystem::create_directories(dir);
  const auto dump = (dir / "h2.fcidump").string();
  const auto out = (dir / "h2.csv").string();
  ASSERT_EQ(run_cli("fcidump-export --atoms 2 --d 0.74 --out " + dump), 0);
  ASSERT_EQ(run_cli("fcidump-import --in " + dump + " --trial exact --out " + out), 0);
  EXPECT_TRUE(std::filesystem::exists(out));
  std::filesystem::remove_all(dir);
}
