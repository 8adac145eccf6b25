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

#include <chrono>
#include <cmath>
#include <numbers>
#include <cstdlib>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hubbard_greens/fock.hpp"
#include "hubbard_greens/model_six.hpp"

namespace hubbard_greens::cli {
namespace {

using io::Json;

std::string momentum_name(Momentum k) { return k == Momentum::zero ? "0" : "pi"; }

Momentum parse_momentum(const std::string& s) {
  if (s == "0") return Momentum::zero;
  if (s == "pi") return Momentum::pi;
  throw std::invalid_argument("k must be 0 or pi, got '" + s + "'");
}

vqe::Target parse_target(const std::string& s) {
  if (s == "ground") return vqe::Target::ground;
  if (s == "excited") return vqe::Target::excited;
  throw std::invalid_argument("sector must be ground or excited, got '" + s + "'");
}

greens::HoleMethod parse_hole_method(const std::string& s) {
  if (s == "direct") return greens::HoleMethod::direct;
  if (s == "mirror") return greens::HoleMethod::mirror;
  throw std::invalid_argument("hole method must be direct or mirror, got '" + s + "'");
}

Json record_header(const Config& config, const std::string& command) {
  return Json{{"tool", "hubbard-greens"}, {"version", io::kToolVersion}, {"command", command}, {"config", to_json(config)}};
}

void finish_record(Json& record, const Config& config, std::chrono::steady_clock::time_point start) {
  if (config.record_timing) {
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    record["metadata"] = Json{{"wall_clock_seconds", secs}};
  }
}

Json poles_json(const std::vector<PoleData>& poles, double ground_energy) {
  Json arr = Json::array();
  for (const PoleData& p : poles) {
    Json j = io::to_json(p);
    j["omega"] = p.position(ground_energy);
    arr.push_back(std::move(j));
  }
  return arr;
}

vqe::VqeConfig vqe_config(const Config& config, vqe::Target target, std::uint64_t seed) {
  vqe::VqeConfig v;
  v.t = config.t;
  v.u = config.u;
  v.target = target;
  v.sector = Sector::particle;
  v.initial_params = resolve_init(config.init);
  v.shots = config.shot_budget();
  v.convergence_rel_tol = config.tol;
  v.param_tol = config.effective_param_tol();
  v.max_sweeps = config.max_sweeps;
  v.seed = seed;
  return v;
}

std::string fmt(double x) { return io::format_double(x); }

}  // namespace

std::optional<double> Config::effective_param_tol() const {
  if (param_tol) return param_tol;
  if (exact) return 1e-12;
  return std::nullopt;
}

std::vector<double> Config::grid() const { return uniform_grid(grid_min, grid_max, grid_points); }

void Config::validate() const {
  if (!(t > 0.0) || !std::isfinite(t)) throw std::invalid_argument("--t must be a finite value > 0");
  if (!(u >= 0.0) || !std::isfinite(u)) throw std::invalid_argument("--U must be a finite value >= 0");
  if (!(eta > 0.0)) throw std::invalid_argument("--eta must be > 0");
  if (grid_points < 2) throw std::invalid_argument("--grid-points must be >= 2");
  if (!(grid_max > grid_min)) throw std::invalid_argument("--grid-max must exceed --grid-min");
  if (!exact && shots < 1) throw std::invalid_argument("--shots must be >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("--tol must be > 0");
  if (param_tol && !(*param_tol > 0.0)) throw std::invalid_argument("--param-tol must be > 0");
  if (max_sweeps < 1) throw std::invalid_argument("--max-sweeps must be >= 1");
  resolve_init(init);
}

photonic::AnsatzParams resolve_init(const std::string& init) {
  if (init.rfind("preset", 0) == 0) {
    const std::string idx = init.substr(6);
    if (idx.size() == 1 && idx[0] >= '1' && idx[0] <= '4') return vqe::preset(idx[0] - '0');
    throw std::invalid_argument("unknown preset '" + init + "' (expected preset1..preset4)");
  }
  std::vector<double> values;
  std::stringstream ss(init);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || !std::isfinite(v)) {
      throw std::invalid_argument("malformed angle '" + item + "' in --init");
    }
    values.push_back(v);
  }
  if (values.size() != 4) {
    throw std::invalid_argument("--init expects preset1..preset4 or four angles theta2,theta4,theta5,theta6");
  }
  photonic::AnsatzParams p;
  p.theta2 = values[0];
  p.theta4 = values[1];
  p.theta5 = values[2];
  p.theta6 = values[3];
  return p;
}

void apply_json(Config& c, const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("config file must hold a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "t") c.t = value.get<double>();
    else if (key == "U") c.u = value.get<double>();
    else if (key == "k") c.k = value.is_null() ? std::nullopt : std::optional(parse_momentum(value.get<std::string>()));
    else if (key == "eta") c.eta = value.get<double>();
    else if (key == "grid_min") c.grid_min = value.get<double>();
    else if (key == "grid_max") c.grid_max = value.get<double>();
    else if (key == "grid_points") c.grid_points = value.get<int>();
    else if (key == "shots") c.shots = value.get<std::uint64_t>();
    else if (key == "exact") c.exact = value.get<bool>();
    else if (key == "seed") c.seed = value.get<std::uint64_t>();
    else if (key == "init") c.init = value.get<std::string>();
    else if (key == "sector") c.target = parse_target(value.get<std::string>());
    else if (key == "tol") c.tol = value.get<double>();
    else if (key == "param_tol") c.param_tol = value.is_null() ? std::nullopt : std::optional(value.get<double>());
    else if (key == "max_sweeps") c.max_sweeps = value.get<int>();
    else if (key == "hole_method") c.hole_method = parse_hole_method(value.get<std::string>());
    else if (key == "out_dir") c.out_dir = value.get<std::string>();
    else if (key == "record_timing") c.record_timing = value.get<bool>();
    else throw std::invalid_argument("unknown config key '" + key + "'");
  }
}

Json to_json(const Config& c) {
  return Json{{"t", c.t},
              {"U", c.u},
              {"k", c.k ? Json(momentum_name(*c.k)) : Json(nullptr)},
              {"eta", c.eta},
              {"grid_min", c.grid_min},
              {"grid_max", c.grid_max},
              {"grid_points", c.grid_points},
              {"shots", c.shots},
              {"exact", c.exact},
              {"seed", c.seed},
              {"init", c.init},
              {"initial_params", io::to_json(resolve_init(c.init))},
              {"sector", std::string(vqe::to_string(c.target))},
              {"tol", c.tol},
              {"param_tol", c.effective_param_tol() ? Json(*c.effective_param_tol()) : Json(nullptr)},
              {"max_sweeps", c.max_sweeps},
              {"hole_method", c.hole_method == greens::HoleMethod::direct ? "direct" : "mirror"}};
}

std::optional<std::uint64_t> seed_from_env() {
  const char* raw = std::getenv("HUBBARD_GREENS_SEED");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == nullptr || *end != '\0') return std::nullopt;
  return static_cast<std::uint64_t>(v);
}

ExactResult cmd_exact(const Config& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  ExactResult out;
  out.spectrum = fock::exact_spectral_function(config.t, config.u, config.grid(), config.eta);
  for (const PoleData& p : out.spectrum.poles) {
    if (!config.k || p.k == *config.k) out.poles.push_back(p);
  }
  Json record = record_header(config, "exact");
  record["ground_energy"] = out.spectrum.ground_energy;
  record["eta"] = config.eta;
  record["poles"] = poles_json(out.poles, out.spectrum.ground_energy);
  finish_record(record, config, start);
  io::write_atomic(config.out_dir / "exact_spectrum.csv", io::spectrum_csv(out.spectrum));
  io::write_atomic(config.out_dir / "exact_poles.json", record.dump(2) + "\n");
  return out;
}

VqeResult cmd_vqe(const Config& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  VqeResult out;
  out.trace = vqe::run_vqe(vqe_config(config, config.target, config.seed));
  const std::string name(vqe::to_string(config.target));
  out.record = record_header(config, "vqe");
  out.record["trace"] = io::to_json(out.trace);
  if (!out.trace.converged) out.record["flags"] = Json::array({"vqe did not converge within max_sweeps"});
  finish_record(out.record, config, start);
  io::write_atomic(config.out_dir / ("vqe_" + name + "_trace.csv"), io::trace_csv(out.trace));
  io::write_atomic(config.out_dir / ("vqe_" + name + "_record.json"), out.record.dump(2) + "\n");
  return out;
}

SpectrumRun run_spectrum_pipeline(const Config& config) {
  config.validate();
  SpectrumRun run;
  run.ground = vqe::run_vqe(vqe_config(config, vqe::Target::ground, derive_seed(config.seed, 1)));

  greens::SectorSearch search;
  search.t = config.t;
  search.u = config.u;
  search.gs_params = run.ground.final_params;
  search.gs_param_stderr = run.ground.final_param_stderr;
  search.initial_params = resolve_init(config.init);
  search.shots = config.shot_budget();
  search.convergence_rel_tol = config.tol;
  search.param_tol = config.effective_param_tol();
  search.max_sweeps = config.max_sweeps;
  search.seed = derive_seed(config.seed, 2);

  run.particle = greens::sector_poles(search, Sector::particle);
  run.hole = greens::hole_part(search, config.hole_method, run.particle.bright);
  run.mirror_check = greens::mirror_poles(run.particle.bright);

  if (!run.ground.converged) run.flags.push_back("ground-state vqe did not converge");
  if (!run.particle.excited.converged) run.flags.push_back("particle excited-state vqe did not converge");
  if (run.hole.direct && !run.hole.direct->excited.converged) {
    run.flags.push_back("hole excited-state vqe did not converge");
  }

  run.poles = run.particle.bright;
  run.poles.insert(run.poles.end(), run.hole.poles.begin(), run.hole.poles.end());
  run.spectrum = greens::spectral_function(run.poles, run.ground.final_energy.value, config.grid(), config.eta);
  run.spectrum.ground_energy_stderr = run.ground.final_energy.std_error;
  run.error = greens::propagate_error(run.spectrum);

  run.oracle = fock::exact_spectral_function(config.t, config.u, config.grid(), config.eta);
  for (Momentum k : {Momentum::zero, Momentum::pi}) {
    const auto& a = run.spectrum.values(k);
    const auto& b = run.oracle.values(k);
    for (std::size_t i = 0; i < a.size(); ++i) {
      run.max_abs_deviation = std::max(run.max_abs_deviation, std::abs(a[i] - b[i]));
      run.oracle_peak = std::max(run.oracle_peak, b[i]);
    }
  }
  return run;
}

SpectrumResult cmd_spectrum(const Config& config) {
  const auto start = std::chrono::steady_clock::now();
  SpectrumResult out;
  out.run = run_spectrum_pipeline(config);
  const SpectrumRun& run = out.run;

  Json traces{{"ground", io::to_json(run.ground)}, {"excited_particle", io::to_json(run.particle.excited)}};
  if (run.hole.direct) traces["excited_hole"] = io::to_json(run.hole.direct->excited);

  out.record = record_header(config, "spectrum");
  out.record["traces"] = traces;
  out.record["ground_energy"] = io::to_json(run.ground.final_energy);
  out.record["poles"] = poles_json(run.poles, run.spectrum.ground_energy);
  out.record["candidate_poles"] =
      Json{{"particle", poles_json(run.particle.candidates, run.spectrum.ground_energy)},
           {"hole", run.hole.direct ? poles_json(run.hole.direct->candidates, run.spectrum.ground_energy) : Json::array()}};
  out.record["mirror_poles"] = poles_json(run.mirror_check, run.spectrum.ground_energy);
  out.record["oracle"] = Json{{"ground_energy", run.oracle.ground_energy},
                              {"poles", poles_json(run.oracle.poles, run.oracle.ground_energy)}};
  out.record["comparison"] = Json{{"max_abs_deviation", run.max_abs_deviation},
                                  {"oracle_peak", run.oracle_peak},
                                  {"relative_deviation", run.relative_deviation()}};
  out.record["flags"] = run.flags;
  finish_record(out.record, config, start);

  io::write_atomic(config.out_dir / "spectrum.csv", io::spectrum_csv(run.spectrum));
  io::write_atomic(config.out_dir / "spectrum_exact.csv", io::spectrum_csv(run.oracle));
  io::write_atomic(config.out_dir / "spectrum_stderr.csv", io::spectrum_error_csv(run.spectrum, run.error));
  io::write_atomic(config.out_dir / "poles.json", out.record["poles"].dump(2) + "\n");
  io::write_atomic(config.out_dir / "run_record.json", out.record.dump(2) + "\n");
  return out;
}

std::vector<Check> cmd_validate(const Config& config, const ValidateOptions& options) {
  config.validate();
  const double t = config.t, u = config.u;
  std::vector<Check> checks;
  auto add = [&checks](std::string name, bool ok, std::string detail) {
    checks.push_back({std::move(name), ok, std::move(detail)});
  };

  {
    CMatrix reference = six::build_six_dim(t, u, Sector::particle).entries;
    reference(options.perturb_row, options.perturb_col) += options.perturb_six;
    const fock::SixDimCheck c = fock::verify_six_dim(t, u, Sector::particle, reference);
    std::string detail = "max deviation " + fmt(c.max_deviation);
    for (const auto& [i, j] : c.flagged) detail += " (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    add("six-dim particle block vs Fock projection", c.ok(), detail);
  }
  {
    std::mt19937_64 gen(20260419);
    std::uniform_real_distribution<double> dt(0.1, 3.0), du(0.0, 12.0);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) worst = std::max(worst, fock::verify_six_dim(dt(gen), du(gen), Sector::particle).max_deviation);
    add("six-dim particle block at 10 random (t,U)", worst <= 1e-12, "max deviation " + fmt(worst));
  }
  {
    const fock::SixDimCheck c = fock::verify_six_dim(t, u, Sector::hole);
    const CMatrix printed = six::build_six_dim(t, u, Sector::particle).entries;
    const double upper = (c.projected.topLeftCorner(4, 4) - printed.topLeftCorner(4, 4)).cwiseAbs().maxCoeff();
    const RVector ev_hole = eigensystem(c.projected.bottomRightCorner(2, 2)).eigenvalues;
    const RVector ev_part = eigensystem(printed.bottomRightCorner(2, 2)).eigenvalues;
    const double spec = (ev_hole - ev_part).cwiseAbs().maxCoeff();
    add("six-dim hole block vs Fock projection", c.ok() && upper <= 1e-12 && spec <= 1e-12,
        std::string("hole-sector hopping entry is ") + (c.trailing_offdiag_sign < 0 ? "-t" : "+t") +
            " (particle block prints +t); 2x2 spectra differ by " + fmt(spec));
  }
  {
    double worst = 0.0;
    for (int a = 0; a < fock::kModes; ++a) {
      for (int b = 0; b < fock::kModes; ++b) {
        const CMatrix ca = fock::fermion_operator(static_cast<fock::Site>(a / 2), static_cast<fock::Spin>(a % 2),
                                                  fock::Ladder::annihilate);
        const CMatrix cb = fock::fermion_operator(static_cast<fock::Site>(b / 2), static_cast<fock::Spin>(b % 2),
                                                  fock::Ladder::annihilate);
        const CMatrix expected = (a == b ? 1.0 : 0.0) * CMatrix::Identity(fock::kDim, fock::kDim);
        worst = std::max(worst, (ca * cb.adjoint() + cb.adjoint() * ca - expected).cwiseAbs().maxCoeff());
        worst = std::max(worst, (ca * cb + cb * ca).cwiseAbs().maxCoeff());
      }
    }
    add("canonical anticommutation", worst <= 1e-12, "max deviation " + fmt(worst));
  }
  {
    const CMatrix h = fock::build_hubbard(t, u);
    double worst = 0.0;
    for (fock::Spin s : {fock::Spin::up, fock::Spin::down}) {
      const CMatrix n = fock::total_number(s);
      worst = std::max(worst, (h * n - n * h).cwiseAbs().maxCoeff());
    }
    add("[H, N_up] = [H, N_down] = 0", worst <= 1e-12, "max deviation " + fmt(worst));
  }
  {
    double worst = 0.0;
    for (Sector s : {Sector::particle, Sector::hole}) {
      CMatrix sum = CMatrix::Zero(six::kDim, six::kDim);
      for (const auto& setting : six::hamiltonian_settings(t, u, s)) sum += setting.observable();
      worst = std::max(worst, (sum - six::build_six_dim(t, u, s).entries).cwiseAbs().maxCoeff());
    }
    add("measurement decomposition reconstructs H_six", worst <= 1e-10, "max deviation " + fmt(worst));
  }
  {
    // Apply c~+_k / c~_k to each (1,1) basis vector and read off components.
    double worst = 0.0;
    const std::vector<int> half = fock::sector_indices(1, 1);
    for (Momentum k : {Momentum::zero, Momentum::pi}) {
      for (Sector s : {Sector::particle, Sector::hole}) {
        const CMatrix op = s == Sector::particle ? CMatrix(fock::momentum_annihilator(k).adjoint())
                                                 : fock::momentum_annihilator(k);
        const std::vector<int> target = s == Sector::particle ? fock::sector_indices(2, 1) : fock::sector_indices(0, 1);
        const CMatrix block = six::transition_block(s, k);
        for (std::size_t j = 0; j < half.size(); ++j) {
          const CVector out = op * CVector::Unit(fock::kDim, half[j]);
          for (std::size_t i = 0; i < target.size(); ++i) {
            worst = std::max(worst, std::abs(out(target[i]) - block(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))));
          }
          // Nothing may leak outside the target sector.
          double inside = 0.0;
          for (int idx : target) inside += std::norm(out(idx));
          worst = std::max(worst, std::abs(out.squaredNorm() - inside));
        }
      }
    }
    add("momentum blocks vs Fock operator action", worst <= 1e-12, "max deviation " + fmt(worst));
  }
  {
    const fock::ExactPoles ex = fock::exact_poles(t, u);
    double worst = 0.0;
    for (Momentum k : {Momentum::zero, Momentum::pi}) worst = std::max(worst, std::abs(greens::total_weight(ex.poles, k) - 1.0));
    add("spectral sum rule per k", worst <= 1e-10, "max |sum w - 1| = " + fmt(worst));
  }
  {
    const CMatrix h = fock::build_hubbard(t, u);
    const EigenSystem es = eigensystem(h);
    const double resid = (h * es.eigenvectors - es.eigenvectors * es.eigenvalues.cast<Complex>().asDiagonal()).colwise().norm().maxCoeff();
    const double unit = (es.eigenvectors.adjoint() * es.eigenvectors - CMatrix::Identity(fock::kDim, fock::kDim)).cwiseAbs().maxCoeff();
    const double hn = h.operatorNorm();
    add("eigen residual and orthonormality", resid <= 1e-10 * hn && unit <= 1e-10,
        "residual " + fmt(resid) + ", unitarity " + fmt(unit));
  }
  {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> ang(-2 * std::numbers::pi, 2 * std::numbers::pi);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      photonic::AnsatzParams p{ang(gen), ang(gen), ang(gen), ang(gen), ang(gen)};
      const CVector a = photonic::prepare_ansatz(p).amplitudes;
      const CVector b = photonic::prepare_ansatz_via_elements(p).amplitudes;
      worst = std::max(worst, std::abs(1.0 - overlap_magnitude(a, b)));
    }
    add("optical element layout reproduces the closed-form ansatz", worst <= 1e-12, "max 1-|<a|b>| = " + fmt(worst));
  }
  return checks;
}

}  // namespace hubbard_greens::cli
