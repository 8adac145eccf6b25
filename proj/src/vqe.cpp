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

#include "hubbard_greens/vqe.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hubbard_greens::vqe {
namespace {

constexpr double kPi = std::numbers::pi;
// Amplitudes below this are rounding residue of an exactly flat direction.
constexpr double kAmplitudeFloor = 1e-12;

double period(Angle angle) { return harmonic_order(angle) == 1 ? 2.0 * kPi : 4.0 * kPi; }

// Maps x into (-p/2, p/2].
double wrap_centered(double x, double p) {
  double r = std::fmod(x + 0.5 * p, p);
  if (r <= 0.0) r += p;
  return r - 0.5 * p;
}

struct Trig2 {
  double a0, a1, b1, a2, b2;
  double value(double u) const {
    return a0 + a1 * std::cos(u) + b1 * std::sin(u) + a2 * std::cos(2 * u) + b2 * std::sin(2 * u);
  }
  double slope(double u) const {
    return -a1 * std::sin(u) + b1 * std::cos(u) - 2 * a2 * std::sin(2 * u) + 2 * b2 * std::cos(2 * u);
  }
  double curvature(double u) const {
    return -a1 * std::cos(u) - b1 * std::sin(u) - 4 * a2 * std::cos(2 * u) - 4 * b2 * std::sin(2 * u);
  }
};

// Global minimizer of a degree-2 trigonometric polynomial on [0, 2pi).
double minimize_trig2(const Trig2& f) {
  constexpr int kScan = 72;
  double best_u = 0.0;
  double best_f = f.value(0.0);
  for (int i = 1; i < kScan; ++i) {
    const double u = 2.0 * kPi * i / kScan;
    if (f.value(u) < best_f) {
      best_f = f.value(u);
      best_u = u;
    }
  }
  double u = best_u;
  for (int iter = 0; iter < 50; ++iter) {
    const double curv = f.curvature(u);
    if (!(curv > 0.0)) break;
    const double du = -f.slope(u) / curv;
    if (std::abs(du) > kPi / kScan) break;
    u += du;
    if (std::abs(du) < 1e-15) break;
  }
  return f.value(u) <= best_f ? u : best_u;
}

}  // namespace

std::string_view to_string(Target t) { return t == Target::ground ? "ground" : "excited"; }

void VqeConfig::validate() const {
  if (!(t > 0.0)) throw std::invalid_argument("vqe: t must be > 0");
  if (!(u >= 0.0)) throw std::invalid_argument("vqe: U must be >= 0");
  if (!(convergence_rel_tol > 0.0)) throw std::invalid_argument("vqe: convergence_rel_tol must be > 0");
  if (max_sweeps < 1) throw std::invalid_argument("vqe: max_sweeps must be >= 1");
  if (param_tol && !(*param_tol > 0.0)) throw std::invalid_argument("vqe: param_tol must be > 0");
  if (shots && *shots < 1) throw std::invalid_argument("vqe: shots must be >= 1");
}

std::vector<Angle> default_order(Target target) {
  if (target == Target::ground) return {Angle::theta2, Angle::theta4, Angle::theta5};
  return {Angle::theta6};
}

int harmonic_order(Angle angle) { return (angle == Angle::theta4 || angle == Angle::theta5) ? 2 : 1; }

double wrap_angle(Angle angle, double theta) { return wrap_centered(theta, period(angle)); }

ExpectationEstimate energy_at(const AnsatzParams& params, std::span<const six::MeasurementSetting> settings, Shots shots,
                              Rng& rng) {
  return photonic::measure_expectation(photonic::prepare_ansatz(params), settings, shots, rng);
}

UpdateResult nft_update(const AnsatzParams& params, Angle angle, std::span<const six::MeasurementSetting> settings,
                        Shots shots, Rng& rng, double flat_guard_factor) {
  const double theta0 = params[angle];
  auto sample = [&](double theta) {
    AnsatzParams p = params;
    p[angle] = theta;
    return energy_at(p, settings, shots, rng);
  };

  UpdateResult out;
  double step = 0.0;
  if (harmonic_order(angle) == 1) {
    const ExpectationEstimate e0 = sample(theta0);
    const ExpectationEstimate ep = sample(theta0 + kPi / 2);
    const ExpectationEstimate em = sample(theta0 - kPi / 2);
    const double a = 0.5 * (ep.value + em.value);
    const double x = e0.value - a;
    const double y = ep.value - a;
    out.amplitude = std::hypot(x, y);
    out.combined_stderr = std::sqrt(e0.std_error * e0.std_error + ep.std_error * ep.std_error +
                                    em.std_error * em.std_error);
    step = std::atan2(y, x) + kPi;
    // f'(theta0 + d) = -sin(d) E0 + (sin d + cos d)/2 E+ + (sin d - cos d)/2 E-; f'' = R at the minimum.
    const double sd = std::sin(step), cd = std::cos(step);
    const double slope_var = std::pow(sd * e0.std_error, 2) + std::pow(0.5 * (sd + cd) * ep.std_error, 2) +
                             std::pow(0.5 * (sd - cd) * em.std_error, 2);
    if (slope_var > 0.0) out.angle_stderr = out.amplitude > 0.0 ? std::sqrt(slope_var) / out.amplitude : kPi;
  } else {
    constexpr int kPoints = 5;
    std::array<ExpectationEstimate, kPoints> e;
    for (int j = 0; j < kPoints; ++j) e[static_cast<std::size_t>(j)] = sample(theta0 + 4.0 * kPi * j / kPoints);
    Trig2 f{0, 0, 0, 0, 0};
    double var = 0.0;
    for (int j = 0; j < kPoints; ++j) {
      const double u = 2.0 * kPi * j / kPoints;
      const double ej = e[static_cast<std::size_t>(j)].value;
      f.a0 += ej / kPoints;
      f.a1 += 2.0 * ej * std::cos(u) / kPoints;
      f.b1 += 2.0 * ej * std::sin(u) / kPoints;
      f.a2 += 2.0 * ej * std::cos(2 * u) / kPoints;
      f.b2 += 2.0 * ej * std::sin(2 * u) / kPoints;
      var += e[static_cast<std::size_t>(j)].std_error * e[static_cast<std::size_t>(j)].std_error;
    }
    out.amplitude = std::sqrt(f.a1 * f.a1 + f.b1 * f.b1 + f.a2 * f.a2 + f.b2 * f.b2);
    out.combined_stderr = std::sqrt(var);
    const double u_min = minimize_trig2(f);
    step = 2.0 * u_min;
    // Each sample enters f'(u) with weight (2/5)[-sin u cos u_j + cos u sin u_j - 2 sin 2u cos 2u_j + 2 cos 2u sin 2u_j].
    double slope_var = 0.0;
    for (int j = 0; j < kPoints; ++j) {
      const double uj = 2.0 * kPi * j / kPoints;
      const double g = 2.0 / kPoints *
                       (-std::sin(u_min) * std::cos(uj) + std::cos(u_min) * std::sin(uj) -
                        2 * std::sin(2 * u_min) * std::cos(2 * uj) + 2 * std::cos(2 * u_min) * std::sin(2 * uj));
      slope_var += std::pow(g * e[static_cast<std::size_t>(j)].std_error, 2);
    }
    const double curv = f.curvature(u_min);
    if (slope_var > 0.0) out.angle_stderr = curv > 0.0 ? 2.0 * std::sqrt(slope_var) / curv : kPi;
  }

  out.params = params;
  out.moved = out.amplitude > std::max(flat_guard_factor * out.combined_stderr, kAmplitudeFloor);
  if (out.moved) {
    out.step = wrap_centered(step, period(angle));
    out.params[angle] = wrap_angle(angle, theta0 + step);
  }
  out.energy = energy_at(out.params, settings, shots, rng);
  return out;
}

VqeTrace run_vqe(const VqeConfig& config) {
  config.validate();
  const std::vector<six::MeasurementSetting> settings = six::hamiltonian_settings(config.t, config.u, config.sector);
  const std::vector<Angle> order = config.order.empty() ? default_order(config.target) : config.order;
  Rng rng(config.seed);

  AnsatzParams params = config.initial_params;
  params.theta1 = config.target == Target::ground ? 0.0 : -kPi;

  VqeTrace trace;
  ExpectationEstimate current = energy_at(params, settings, config.shots, rng);
  trace.records.push_back({0, std::nullopt, params, current, false});
  trace.sweep_energies.push_back(current);

  for (int sweep = 1; sweep <= config.max_sweeps; ++sweep) {
    double max_step = 0.0;
    for (Angle angle : order) {
      const UpdateResult r = nft_update(params, angle, settings, config.shots, rng, config.flat_guard_factor);
      params = r.params;
      current = r.energy;
      max_step = std::max(max_step, std::abs(r.step));
      trace.final_param_stderr[angle] = r.angle_stderr;
      trace.records.push_back({sweep, angle, params, current, r.moved});
    }
    const double previous = trace.sweep_energies.back().value;
    trace.sweep_energies.push_back(current);
    trace.sweeps = sweep;
    const double change = std::abs(current.value - previous);
    const double rel = previous != 0.0 ? change / std::abs(previous) : change;
    if (rel < config.convergence_rel_tol && (!config.param_tol || max_step < *config.param_tol)) {
      trace.converged = true;
      break;
    }
  }
  trace.final_params = params;
  trace.final_energy = current;
  return trace;
}

AnsatzParams preset(int index) {
  AnsatzParams p;
  auto set = [&p](double t2, double t4, double t5, double t6) {
    p.theta2 = t2;
    p.theta4 = t4;
    p.theta5 = t5;
    p.theta6 = t6;
  };
  switch (index) {
    case 1: set(kPi / 2, kPi / 2, kPi / 2, kPi / 2); break;
    case 2: set(kPi, kPi, kPi, kPi); break;
    case 3: set(0.82, 0.99, 0.11, 0.52); break;
    case 4: set(0.97, 0.65, 0.91, 0.36); break;
    default: throw std::out_of_range("preset index must be 1..4");
  }
  return p;
}

}  // namespace hubbard_greens::vqe
