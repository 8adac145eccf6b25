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

// Transition amplitudes between variational states and assembly of the
// up-spin spectral function from them.

#include <cstdint>
#include <optional>
#include <vector>

#include "hubbard_greens/model_six.hpp"
#include "hubbard_greens/photonic.hpp"
#include "hubbard_greens/spectrum.hpp"
#include "hubbard_greens/vqe.hpp"

namespace hubbard_greens::greens {

using photonic::AnsatzParams;
using photonic::ExpectationEstimate;
using photonic::Shots;

/// |v><v| with v = B^H |ES>, where B is the (1,1) -> sector block of c~+_k
/// (particle) or c~_k (hole). Measuring it on |GS> gives |<ES|B|GS>|^2.
struct TransitionProjector {
  six::SixObservable observable;
  /// Rotation sends v/|v| to |1>; outcome values are (|v|^2, 0, 0, 0, 0, 0).
  six::MeasurementSetting setting;
  double norm2 = 0.0;
  bool dark = false;  // |v| < 1e-12; observable and outcome values are zero
};

TransitionProjector transition_projector(Sector sector, const Eigen::Vector2cd& es_state, Momentum k);

/// psi_ES(theta6) = (sin(theta6/2), cos(theta6/2)) on |5>, |6>.
Eigen::Vector2cd excited_amplitudes(const AnsatzParams& params);

/// The other state of the two-dimensional sector: theta6 + pi.
AnsatzParams orthogonal_partner(const AnsatzParams& es_params);

/// Shot-sampled (or exact) |<ES|B_k|GS>|^2 using the single rotated setting
/// of transition_projector, with |GS> prepared at theta1 = 0.
ExpectationEstimate measure_transition_amplitude(const AnsatzParams& gs_params, const AnsatzParams& es_params,
                                                 Sector sector, Momentum k, Shots shots, Rng& rng);

/// Direct inner product |<ES|B_k|GS>|^2, for cross-checks.
double exact_transition_amplitude(const AnsatzParams& gs_params, const AnsatzParams& es_params, Sector sector,
                                  Momentum k);

/// Settings shared by the excited-sector searches.
struct SectorSearch {
  double t = 1.0;
  double u = 6.0;
  AnsatzParams gs_params;
  /// Stderr of the ground-state angles, propagated into the weights.
  AnsatzParams gs_param_stderr;
  AnsatzParams initial_params;
  Shots shots = photonic::kExact;
  double convergence_rel_tol = 1e-3;
  std::optional<double> param_tol;
  int max_sweeps = 50;
  std::uint64_t seed = 0;
};

/// Variance of |<ES|B_k|GS>|^2 induced by angle uncertainties, to first
/// order: sum_i (dw/dtheta_i * sigma_i)^2 over theta2, theta4, theta5 of the
/// ground state and theta6 of the excited state.
double weight_variance_from_angles(const AnsatzParams& gs_params, const AnsatzParams& gs_stderr,
                                   const AnsatzParams& es_params, double theta6_stderr, Sector sector, Momentum k);

struct SectorPoles {
  vqe::VqeTrace excited;
  /// Every (state, k) combination that was measured, bright or not.
  std::vector<PoleData> candidates;
  /// Brightest state per momentum.
  std::vector<PoleData> bright;
};

/// Runs the excited-sector VQE on `sector`, takes its optimum and the
/// orthogonal partner state, and measures both energies and all four
/// transition amplitudes. Weight stderrs combine shot noise with the
/// propagated angle uncertainties of both states.
SectorPoles sector_poles(const SectorSearch& search, Sector sector);

/// Particle poles (k, omega, w) -> hole poles (k + pi, -omega, w).
std::vector<PoleData> mirror_poles(const std::vector<PoleData>& particle);

enum class HoleMethod { direct, mirror };

/// Hole poles by an own VQE in the (0,1) sector (`direct`) or by reflecting
/// `particle` (`mirror`). The trace is only present for `direct`.
struct HolePart {
  std::vector<PoleData> poles;
  std::optional<SectorPoles> direct;
};
HolePart hole_part(const SectorSearch& search, HoleMethod method, const std::vector<PoleData>& particle);

}  // namespace hubbard_greens::greens
