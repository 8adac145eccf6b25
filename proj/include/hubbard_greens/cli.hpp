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

#pragma once

// Command implementations behind the hubbard-greens executable. Each cmd_*
// function writes its output files into Config::out_dir and returns what it
// computed so tests can inspect results without re-reading files.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hubbard_greens/greens.hpp"
#include "hubbard_greens/run_record.hpp"
#include "hubbard_greens/vqe.hpp"

namespace hubbard_greens::cli {

/// Energies are in units of t throughout.
struct Config {
  double t = 1.0;
  double u = 6.0;
  std::optional<Momentum> k;  // restricts the pole list of `exact`
  double eta = 0.1;
  double grid_min = -10.0;
  double grid_max = 10.0;
  int grid_points = 2001;
  std::uint64_t shots = 10000;
  bool exact = false;
  std::uint64_t seed = 0;
  std::string init = "preset1";  // preset1..preset4 or "theta2,theta4,theta5,theta6"
  vqe::Target target = vqe::Target::ground;
  double tol = 1e-3;
  std::optional<double> param_tol;
  int max_sweeps = 50;
  greens::HoleMethod hole_method = greens::HoleMethod::direct;
  std::filesystem::path out_dir = ".";
  bool record_timing = false;

  photonic::Shots shot_budget() const { return exact ? photonic::kExact : photonic::Shots(shots); }
  /// Explicit param_tol, else 1e-12 in exact mode and none when sampling.
  std::optional<double> effective_param_tol() const;
  std::vector<double> grid() const;
  void validate() const;
};

/// Resolves `init` to angles. Throws std::invalid_argument for an unknown
/// preset or a malformed angle list.
photonic::AnsatzParams resolve_init(const std::string& init);

/// Overlays the keys present in `j` onto `config`. Unknown keys are rejected.
void apply_json(Config& config, const io::Json& j);
io::Json to_json(const Config& config);

/// Seed from HUBBARD_GREENS_SEED, if set and parseable.
std::optional<std::uint64_t> seed_from_env();

struct ExactResult {
  SpectrumSeries spectrum;
  std::vector<PoleData> poles;  // after the optional k filter
};
ExactResult cmd_exact(const Config& config);

struct VqeResult {
  vqe::VqeTrace trace;
  io::Json record;
};
VqeResult cmd_vqe(const Config& config);

struct SpectrumRun {
  vqe::VqeTrace ground;
  greens::SectorPoles particle;
  greens::HolePart hole;
  std::vector<PoleData> mirror_check;  // mirror of the particle poles
  std::vector<PoleData> poles;         // poles entering the spectrum
  SpectrumSeries spectrum;
  greens::SpectrumError error;
  SpectrumSeries oracle;
  double max_abs_deviation = 0.0;
  double oracle_peak = 0.0;
  std::vector<std::string> flags;

  double relative_deviation() const { return max_abs_deviation / oracle_peak; }
};

/// Full pipeline without file output.
SpectrumRun run_spectrum_pipeline(const Config& config);

struct SpectrumResult {
  SpectrumRun run;
  io::Json record;
};
SpectrumResult cmd_spectrum(const Config& config);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidateOptions {
  /// Added to entry (row, col) of the six-state reference before comparing
  /// with the Fock projection. Zero leaves the reference intact.
  double perturb_six = 0.0;
  int perturb_row = 0;
  int perturb_col = 0;
};

std::vector<Check> cmd_validate(const Config& config, const ValidateOptions& options = {});

}  // namespace hubbard_greens::cli
