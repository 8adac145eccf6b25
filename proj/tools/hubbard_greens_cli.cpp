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

// hubbard-greens: exact oracle, VQE runs and spectral-function pipeline for
// the two-site Hubbard model on a six-state photonic register.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hubbard_greens/cli.hpp"
#include "hubbard_greens/run_record.hpp"

namespace hg = hubbard_greens;

namespace {

struct Flags {
  std::optional<double> t, u, eta, grid_min, grid_max, tol, param_tol;
  std::optional<int> grid_points, max_sweeps;
  std::optional<std::uint64_t> shots, seed;
  std::optional<std::string> k, init, sector, out_dir, config, hole_method;
  bool exact = false;
  bool record_timing = false;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "JSON config file; flags override its values");
  cmd->add_option("--t", f.t, "hopping t (energy unit; default 1)");
  cmd->add_option("--U", f.u, "on-site repulsion in units of t (default 6)");
  cmd->add_option("--eta", f.eta, "Lorentzian broadening in units of t (default 0.1)");
  cmd->add_option("--grid-min", f.grid_min, "lowest omega in units of t (default -10)");
  cmd->add_option("--grid-max", f.grid_max, "highest omega in units of t (default 10)");
  cmd->add_option("--grid-points", f.grid_points, "number of omega points (default 2001)");
  cmd->add_option("--out-dir", f.out_dir, "directory for output files (default .)");
  cmd->add_flag("--record-timing", f.record_timing, "store wall-clock time in the run record (breaks bit-identical reruns)");
}

void add_sampling(CLI::App* cmd, Flags& f) {
  cmd->add_option("--shots", f.shots, "photons per measurement setting (default 10000)");
  cmd->add_flag("--exact", f.exact, "use exact expectation values instead of sampled counts");
  cmd->add_option("--seed", f.seed, "RNG seed (fallback: HUBBARD_GREENS_SEED, then 0)");
  cmd->add_option("--init", f.init, "preset1..preset4 or theta2,theta4,theta5,theta6 in radians");
  cmd->add_option("--tol", f.tol, "relative energy change that ends the sweeps (default 1e-3)");
  cmd->add_option("--param-tol", f.param_tol, "largest angle step that ends the sweeps (default 1e-12 with --exact, off otherwise)");
  cmd->add_option("--max-sweeps", f.max_sweeps, "sweep budget (default 50)");
}

hg::cli::Config build_config(const Flags& f) {
  hg::cli::Config c;
  if (f.config) hg::cli::apply_json(c, hg::io::Json::parse(hg::io::read_file(*f.config)));
  if (auto env = hg::cli::seed_from_env(); env && !f.seed) c.seed = *env;
  if (f.t) c.t = *f.t;
  if (f.u) c.u = *f.u;
  if (f.eta) c.eta = *f.eta;
  if (f.grid_min) c.grid_min = *f.grid_min;
  if (f.grid_max) c.grid_max = *f.grid_max;
  if (f.grid_points) c.grid_points = *f.grid_points;
  if (f.shots) c.shots = *f.shots;
  if (f.exact) c.exact = true;
  if (f.seed) c.seed = *f.seed;
  if (f.init) c.init = *f.init;
  if (f.tol) c.tol = *f.tol;
  if (f.param_tol) c.param_tol = *f.param_tol;
  if (f.max_sweeps) c.max_sweeps = *f.max_sweeps;
  if (f.out_dir) c.out_dir = *f.out_dir;
  if (f.record_timing) c.record_timing = true;
  hg::io::Json overrides = hg::io::Json::object();
  if (f.k) overrides["k"] = *f.k;
  if (f.sector) overrides["sector"] = *f.sector;
  if (f.hole_method) overrides["hole_method"] = *f.hole_method;
  hg::cli::apply_json(c, overrides);
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-site Hubbard Green's function via a six-state photonic VQE simulator. Energies in units of t."};
  app.require_subcommand(1);
  Flags f;

  CLI::App* exact = app.add_subcommand("exact", "exact-diagonalization spectrum and poles");
  add_common(exact, f);
  exact->add_option("--k", f.k, "restrict the pole list to k = 0 or pi");

  CLI::App* vqe = app.add_subcommand("vqe", "single VQE run with an iteration trace");
  add_common(vqe, f);
  add_sampling(vqe, f);
  vqe->add_option("--sector", f.sector, "ground or excited (default ground)");

  CLI::App* spectrum = app.add_subcommand("spectrum", "full VQE pipeline to the spectral function");
  add_common(spectrum, f);
  add_sampling(spectrum, f);
  spectrum->add_option("--hole-method", f.hole_method, "direct (own hole-sector VQE) or mirror (default direct)");

  CLI::App* validate = app.add_subcommand("validate", "oracle-equivalence and invariant checks");
  add_common(validate, f);

  CLI11_PARSE(app, argc, argv);

  try {
    const hg::cli::Config config = build_config(f);
    if (exact->parsed()) {
      const auto r = hg::cli::cmd_exact(config);
      std::cout << "ground energy " << hg::io::format_double(r.spectrum.ground_energy) << "\n";
      for (const auto& p : r.poles) {
        std::cout << hg::to_string(p.sector) << " k=" << hg::to_string(p.k)
                  << " omega=" << hg::io::format_double(p.position(r.spectrum.ground_energy))
                  << " weight=" << hg::io::format_double(p.weight) << "\n";
      }
    } else if (vqe->parsed()) {
      const auto r = hg::cli::cmd_vqe(config);
      std::cout << hg::vqe::to_string(config.target) << " energy " << hg::io::format_double(r.trace.final_energy.value)
                << " +- " << hg::io::format_double(r.trace.final_energy.std_error) << " after " << r.trace.sweeps
                << " sweeps (" << (r.trace.converged ? "converged" : "NOT converged") << ")\n";
    } else if (spectrum->parsed()) {
      const auto r = hg::cli::cmd_spectrum(config);
      std::cout << "ground energy " << hg::io::format_double(r.run.ground.final_energy.value) << " +- "
                << hg::io::format_double(r.run.ground.final_energy.std_error) << "\n"
                << "max |A - A_exact| = " << hg::io::format_double(r.run.max_abs_deviation) << " ("
                << hg::io::format_double(r.run.relative_deviation()) << " of peak height)\n";
      for (const auto& flag : r.run.flags) std::cout << "FLAG: " << flag << "\n";
    } else if (validate->parsed()) {
      bool all = true;
      for (const auto& c : hg::cli::cmd_validate(config)) {
        std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name << ": " << c.detail << "\n";
        all = all && c.passed;
      }
      return all ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
