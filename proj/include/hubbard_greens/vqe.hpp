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

// Variational eigensolver over the photonic ansatz with sequential
// single-angle trigonometric updates.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hubbard_greens/model_six.hpp"
#include "hubbard_greens/photonic.hpp"
#include "hubbard_greens/rng.hpp"

namespace hubbard_greens::vqe {

using photonic::Angle;
using photonic::AnsatzParams;
using photonic::ExpectationEstimate;
using photonic::Shots;

/// ground: theta1 = 0, search the (1,1) block. excited: theta1 = -pi, search
/// the two-state particle/hole block.
enum class Target { ground, excited };

std::string_view to_string(Target t);

struct VqeConfig {
  double t = 1.0;
  double u = 6.0;
  Target target = Target::ground;
  Sector sector = Sector::particle;
  AnsatzParams initial_params;
  Shots shots = photonic::kExact;
  double convergence_rel_tol = 1e-3;
  /// When set, a sweep also has to move every angle by less than this.
  std::optional<double> param_tol;
  int max_sweeps = 50;
  double flat_guard_factor = 10.0;
  std::uint64_t seed = 0;
  /// Sweep order; empty means theta2, theta4, theta5 (ground) or theta6 (excited).
  std::vector<Angle> order;

  void validate() const;
};

/// One row of the iteration trace. Row 0 of a trace is the initial point
/// (sweep 0, no angle).
struct VqeRecord {
  int sweep = 0;
  std::optional<Angle> angle;
  AnsatzParams params;
  ExpectationEstimate energy;
  bool moved = false;
};

struct VqeTrace {
  std::vector<VqeRecord> records;
  /// Energy after each completed sweep, index 0 being the initial energy.
  std::vector<ExpectationEstimate> sweep_energies;
  AnsatzParams final_params;
  /// Stderr of each angle from its most recent fit (zero for untouched angles).
  AnsatzParams final_param_stderr;
  ExpectationEstimate final_energy;
  bool converged = false;
  int sweeps = 0;
};

/// Angles that the target varies, in the default sweep order.
std::vector<Angle> default_order(Target target);

/// Energy of the ansatz, in units of t.
ExpectationEstimate energy_at(const AnsatzParams& params, std::span<const six::MeasurementSetting> settings, Shots shots,
                              Rng& rng);

/// Half-angle content of E(theta) for one angle: 1 means E = A + R cos(theta - phi);
/// 2 means harmonics at theta/2 and theta are both present.
int harmonic_order(Angle angle);

struct UpdateResult {
  AnsatzParams params;
  ExpectationEstimate energy;  // at the new point
  bool moved = false;
  double amplitude = 0.0;      // fitted oscillation amplitude
  double combined_stderr = 0.0;
  double step = 0.0;           // signed change of the angle, modulo its period
  /// Linearized stderr of the fitted minimizer: the noise of dE/dtheta at the
  /// chosen point divided by the fitted curvature there. Zero in exact mode.
  double angle_stderr = 0.0;
};

/// Sequential minimal update of one angle.
///
/// Order-1 angles (theta1, theta2, theta6) sample theta0 and theta0 +- pi/2,
/// reconstruct A = (E+ + E-)/2, x = E0 - A, y = E+ - A, phi = atan2(y, x) and
/// jump to theta0 + phi + pi. Order-2 angles (theta4, theta5) also carry a
/// half-frequency term, so five equispaced samples over the 4pi period fit
/// E = a0 + sum_{m=1,2} (a_m cos(m u) + b_m sin(m u)), u = (theta - theta0)/2,
/// whose global minimum is located by a coarse scan plus Newton steps.
///
/// The angle is left alone when the fitted amplitude is at most
/// `flat_guard_factor` times the combined stderr of the samples.
UpdateResult nft_update(const AnsatzParams& params, Angle angle, std::span<const six::MeasurementSetting> settings,
                        Shots shots, Rng& rng, double flat_guard_factor = 10.0);

VqeTrace run_vqe(const VqeConfig& config);

/// Initial {theta2, theta4, theta5, theta6} sets 1..4 used in the reference
/// experiment. Throws std::out_of_range for other indices.
AnsatzParams preset(int index);

/// Wraps `theta` into the half-open period window of `angle`:
/// (-pi, pi] for order-1 angles, (-2pi, 2pi] for order-2 angles.
double wrap_angle(Angle angle, double theta);

}  // namespace hubbard_greens::vqe
