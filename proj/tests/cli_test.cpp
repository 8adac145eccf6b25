// Copyright 2026 The hubbard-greens Authors
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

#include "hubbard_greens/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

namespace hubbard_greens::cli {
namespace {

namespace fs = std::filesystem;

constexpr double kGround = -6.60555127546399;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("hubbard_greens_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  Config config(const std::string& sub) const {
    Config c;
    c.out_dir = dir_ / sub;
    return c;
  }

  fs::path dir_;
};

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST_F(CliTest, ExactWritesSpectrumAndPoles) {
  const Config c = config("exact");
  const ExactResult r = cmd_exact(c);
  EXPECT_NEAR(r.spectrum.ground_energy, kGround, 1e-12);
  EXPECT_EQ(r.poles.size(), 4u);
  const auto csv = lines(io::read_file(c.out_dir / "exact_spectrum.csv"));
  ASSERT_EQ(csv.size(), 2002u);
  EXPECT_EQ(csv.front(), "omega,A_k0,A_kpi");
  EXPECT_EQ(csv[1].substr(0, 4), "-10,");
  const io::Json j = io::Json::parse(io::read_file(c.out_dir / "exact_poles.json"));
  EXPECT_NEAR(j.at("ground_energy").get<double>(), kGround, 1e-12);
  EXPECT_EQ(j.at("poles").size(), 4u);
  EXPECT_EQ(j.at("command"), "exact");
}

TEST_F(CliTest, ExactMomentumFilterAndFreeLimit) {
  Config c = config("free");
  c.u = 0.0;
  c.k = Momentum::pi;
  const ExactResult r = cmd_exact(c);
  ASSERT_EQ(r.poles.size(), 1u);
  EXPECT_NEAR(r.poles[0].position(r.spectrum.ground_energy), 1.0, 1e-12);
  EXPECT_NEAR(r.poles[0].weight, 1.0, 1e-12);
}

TEST_F(CliTest, VqePresetsReachGround) {
  for (int k = 1; k <= 4; ++k) {
    Config c = config("vqe");
    c.exact = true;
    c.init = "preset" + std::to_string(k);
    const VqeResult r = cmd_vqe(c);
    EXPECT_TRUE(r.trace.converged);
    EXPECT_NEAR(r.trace.final_energy.value, kGround, 1e-10);
  }
  const auto csv = lines(io::read_file(dir_ / "vqe" / "vqe_ground_trace.csv"));
  EXPECT_EQ(csv.front(), "sweep,theta2,theta4,theta5,theta6,energy,stderr");
  EXPECT_TRUE(fs::exists(dir_ / "vqe" / "vqe_ground_record.json"));
}

TEST_F(CliTest, SampledRunsAreByteIdentical) {
  Config a = config("a"), b = config("b");
  a.seed = b.seed = 5;
  cmd_spectrum(a);
  cmd_spectrum(b);
  for (const char* name : {"spectrum.csv", "spectrum_stderr.csv", "poles.json", "run_record.json"}) {
    EXPECT_EQ(io::read_file(a.out_dir / name), io::read_file(b.out_dir / name)) << name;
  }
  const io::Json rec = io::Json::parse(io::read_file(a.out_dir / "run_record.json"));
  EXPECT_FALSE(rec.contains("metadata"));
  EXPECT_EQ(rec.at("config").at("seed"), 5);
}

TEST_F(CliTest, TimingIsOptIn) {
  Config c = config("timed");
  c.exact = true;
  c.record_timing = true;
  const VqeResult r = cmd_vqe(c);
  EXPECT_TRUE(r.record.contains("metadata"));
}

TEST_F(CliTest, ExactSpectrumMatchesOracle) {
  Config c = config("spectrum");
  c.exact = true;
  const SpectrumResult r = cmd_spectrum(c);
  EXPECT_LT(r.run.relative_deviation(), 1e-8);
  EXPECT_TRUE(r.run.flags.empty());
  const auto csv = lines(io::read_file(c.out_dir / "spectrum_stderr.csv"));
  EXPECT_EQ(csv.front(), "omega,sigma_k0,sigma_kpi");
  EXPECT_EQ(csv.size(), 2002u);
}

TEST_F(CliTest, MirrorHoleMethod) {
  Config c = config("mirror");
  c.exact = true;
  c.hole_method = greens::HoleMethod::mirror;
  const SpectrumResult r = cmd_spectrum(c);
  EXPECT_FALSE(r.run.hole.direct.has_value());
  EXPECT_LT(r.run.relative_deviation(), 1e-8);
}

TEST(Config, ResolveInit) {
  EXPECT_EQ(resolve_init("preset3"), vqe::preset(3));
  const photonic::AnsatzParams p = resolve_init("0.1,0.2,-0.3,4");
  EXPECT_EQ(p.theta2, 0.1);
  EXPECT_EQ(p.theta5, -0.3);
  EXPECT_EQ(p.theta6, 4.0);
  EXPECT_THROW(resolve_init("preset9"), std::invalid_argument);
  EXPECT_THROW(resolve_init("0.1,0.2"), std::invalid_argument);
  EXPECT_THROW(resolve_init("0.1,x,0.2,0.3"), std::invalid_argument);
}

TEST(Config, JsonApplyAndRoundTrip) {
  Config c;
  apply_json(c, io::Json::parse(R"({"t": 2.0, "U": 4.0, "k": "pi", "shots": 500, "sector": "excited",
                                     "hole_method": "mirror", "param_tol": 1e-9})"));
  EXPECT_EQ(c.t, 2.0);
  EXPECT_EQ(c.u, 4.0);
  EXPECT_EQ(c.k, Momentum::pi);
  EXPECT_EQ(c.shots, 500u);
  EXPECT_EQ(c.target, vqe::Target::excited);
  EXPECT_EQ(c.hole_method, greens::HoleMethod::mirror);
  EXPECT_EQ(c.param_tol, 1e-9);

  io::Json j = to_json(c);
  j.erase("initial_params");
  Config d;
  apply_json(d, j);
  EXPECT_EQ(to_json(d), to_json(c));

  EXPECT_THROW(apply_json(c, io::Json::parse(R"({"bogus": 1})")), std::invalid_argument);
  EXPECT_THROW(apply_json(c, io::Json::parse(R"({"k": "half"})")), std::invalid_argument);
  EXPECT_THROW(apply_json(c, io::Json::parse("[1, 2]")), std::invalid_argument);
}

TEST(Config, EffectiveParamTol) {
  Config c;
  EXPECT_FALSE(c.effective_param_tol().has_value());
  c.exact = true;
  EXPECT_EQ(c.effective_param_tol(), 1e-12);
  c.param_tol = 1e-6;
  EXPECT_EQ(c.effective_param_tol(), 1e-6);
  EXPECT_EQ(c.shot_budget(), photonic::kExact);
}

TEST(Config, ValidateRejectsBadValues) {
  auto bad = [](auto mutate) {
    Config c;
    mutate(c);
    return c;
  };
  EXPECT_THROW(bad([](Config& c) { c.t = 0; }).validate(), std::invalid_argument);
  EXPECT_THROW(bad([](Config& c) { c.u = -1; }).validate(), std::invalid_argument);
  EXPECT_THROW(bad([](Config& c) { c.eta = 0; }).validate(), std::invalid_argument);
  EXPECT_THROW(bad([](Config& c) { c.grid_points = 1; }).validate(), std::invalid_argument);
  EXPECT_THROW(bad([](Config& c) { c.grid_max = c.grid_min; }).validate(), std::invalid_argument);
  EXPECT_THROW(bad([](Config& c) { c.shots = 0; }).validate(), std::invalid_argument);
  EXPECT_THROW(bad([](Config& c) { c.tol = 0; }).validate(), std::invalid_argument);
  EXPECT_THROW(bad([](Config& c) { c.max_sweeps = 0; }).validate(), std::invalid_argument);
}

TEST(Config, SeedFromEnvironment) {
  ::setenv("HUBBARD_GREENS_SEED", "1234", 1);
  EXPECT_EQ(seed_from_env(), 1234u);
  ::setenv("HUBBARD_GREENS_SEED", "12x", 1);
  EXPECT_FALSE(seed_from_env().has_value());
  ::unsetenv("HUBBARD_GREENS_SEED");
  EXPECT_FALSE(seed_from_env().has_value());
}

TEST(Validate, AllChecksPass) {
  const std::vector<Check> checks = cmd_validate(Config{});
  EXPECT_EQ(checks.size(), 10u);
  for (const Check& c : checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
  EXPECT_NE(checks[2].detail.find("-t"), std::string::npos);
}

TEST(Validate, PerturbationIsReportedWithItsEntry) {
  const std::vector<Check> checks = cmd_validate(Config{}, {1e-6, 2, 3});
  EXPECT_FALSE(checks[0].passed);
  EXPECT_NE(checks[0].detail.find("(3,4)"), std::string::npos) << checks[0].detail;
  for (std::size_t i = 1; i < checks.size(); ++i) EXPECT_TRUE(checks[i].passed) << checks[i].name;
}

TEST(Format, DoublesRoundTrip) {
  for (double x : {kGround, 0.1, 1e-300, -2.5e17}) EXPECT_EQ(std::stod(io::format_double(x)), x);
  EXPECT_EQ(io::format_double(-10.0), "-10");
}

}  // namespace
}  // namespace hubbard_greens::cli
