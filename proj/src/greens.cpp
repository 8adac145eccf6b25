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

#include "hubbard_greens/greens.hpp"

#include <cmath>
#include <numbers>

namespace hubbard_greens::greens {
namespace {

// Unitary whose first row is u^H, completed by Gram-Schmidt over the standard basis.
CMatrix rotation_to_first(const CVector& unit) {
  const Eigen::Index n = unit.size();
  std::vector<CVector> rows{unit};
  for (Eigen::Index e = 0; e < n && static_cast<Eigen::Index>(rows.size()) < n; ++e) {
    CVector cand = CVector::Unit(n, e);
    for (const CVector& r : rows) cand -= r * r.dot(cand);
    // Re-orthogonalize once; the vectors are short and this keeps unitarity at 1e-15.
    for (const CVector& r : rows) cand -= r * r.dot(cand);
    if (cand.norm() > 1e-6) rows.push_back(cand / cand.norm());
  }
  CMatrix rot(n, n);
  for (Eigen::Index i = 0; i < n; ++i) rot.row(i) = rows[static_cast<std::size_t>(i)].adjoint();
  return rot;
}

}  // namespace

TransitionProjector transition_projector(Sector sector, const Eigen::Vector2cd& es_state, Momentum k) {
  const CMatrix block = six::transition_block(sector, k);
  const CVector v4 = block.adjoint() * es_state;
  CVector v = CVector::Zero(six::kDim);
  v.head(4) = v4;

  TransitionProjector out;
  out.norm2 = v.squaredNorm();
  out.dark = v.norm() < 1e-12;
  out.observable.label = "transition(" + std::string(to_string(sector)) + ",k=" + std::string(to_string(k)) + ")";
  out.setting.label = out.observable.label;
  if (out.dark) {
    out.observable.entries = CMatrix::Zero(six::kDim, six::kDim);
    out.setting.rotation = CMatrix::Identity(six::kDim, six::kDim);
    return out;
  }
  out.observable.entries = v * v.adjoint();
  out.setting.rotation = rotation_to_first(v / v.norm());
  out.setting.outcome_values[0] = out.norm2;
  return out;
}

Eigen::Vector2cd excited_amplitudes(const AnsatzParams& params) {
  return {std::sin(params.theta6 / 2), std::cos(params.theta6 / 2)};
}

AnsatzParams orthogonal_partner(const AnsatzParams& es_params) {
  AnsatzParams p = es_params;
  p.theta6 = vqe::wrap_angle(photonic::Angle::theta6, p.theta6 + std::numbers::pi);
  return p;
}

ExpectationEstimate measure_transition_amplitude(const AnsatzParams& gs_params, const AnsatzParams& es_params,
                                                 Sector sector, Momentum k, Shots shots, Rng& rng) {
  AnsatzParams gs = gs_params;
  gs.theta1 = 0.0;
  const TransitionProjector proj = transition_projector(sector, excited_amplitudes(es_params), k);
  const six::MeasurementSetting settings[] = {proj.setting};
  return photonic::measure_expectation(photonic::prepare_ansatz(gs), settings, shots, rng);
}

double exact_transition_amplitude(const AnsatzParams& gs_params, const AnsatzParams& es_params, Sector sector,
                                  Momentum k) {
  AnsatzParams gs = gs_params;
  gs.theta1 = 0.0;
  const CVector psi = photonic::prepare_ansatz(gs).amplitudes.head(4);
  const Eigen::Vector2cd es = excited_amplitudes(es_params);
  return std::norm(es.dot(six::transition_block(sector, k) * psi));
}

double weight_variance_from_angles(const AnsatzParams& gs_params, const AnsatzParams& gs_stderr,
                                   const AnsatzParams& es_params, double theta6_stderr, Sector sector, Momentum k) {
  constexpr double h = 1e-6;
  using photonic::Angle;
  double var = 0.0;
  for (Angle a : {Angle::theta2, Angle::theta4, Angle::theta5}) {
    if (gs_stderr[a] == 0.0) continue;
    AnsatzParams up = gs_params, down = gs_params;
    up[a] += h;
    down[a] -= h;
    const double d = (exact_transition_amplitude(up, es_params, sector, k) -
                      exact_transition_amplitude(down, es_params, sector, k)) / (2 * h);
    var += std::pow(d * gs_stderr[a], 2);
  }
  if (theta6_stderr != 0.0) {
    AnsatzParams up = es_params, down = es_params;
    up.theta6 += h;
    down.theta6 -= h;
    const double d = (exact_transition_amplitude(gs_params, up, sector, k) -
                      exact_transition_amplitude(gs_params, down, sector, k)) / (2 * h);
    var += std::pow(d * theta6_stderr, 2);
  }
  return var;
}

SectorPoles sector_poles(const SectorSearch& search, Sector sector) {
  vqe::VqeConfig cfg;
  cfg.t = search.t;
  cfg.u = search.u;
  cfg.target = vqe::Target::excited;
  cfg.sector = sector;
  cfg.initial_params = search.initial_params;
  cfg.shots = search.shots;
  cfg.convergence_rel_tol = search.convergence_rel_tol;
  cfg.param_tol = search.param_tol;
  cfg.max_sweeps = search.max_sweeps;
  cfg.seed = derive_seed(search.seed, sector == Sector::particle ? 11 : 12);

  SectorPoles out;
  out.excited = vqe::run_vqe(cfg);

  Rng rng(derive_seed(search.seed, sector == Sector::particle ? 21 : 22));
  const auto settings = six::hamiltonian_settings(search.t, search.u, sector);
  const AnsatzParams first = out.excited.final_params;
  const AnsatzParams second = orthogonal_partner(first);
  const ExpectationEstimate e_first = out.excited.final_energy;
  const ExpectationEstimate e_second = vqe::energy_at(second, settings, search.shots, rng);

  for (Momentum k : {Momentum::zero, Momentum::pi}) {
    for (const auto& [params, energy] : {std::pair{first, e_first}, std::pair{second, e_second}}) {
      const ExpectationEstimate w = measure_transition_amplitude(search.gs_params, params, sector, k, search.shots, rng);
      const double angle_var = weight_variance_from_angles(search.gs_params, search.gs_param_stderr, params,
                                                           out.excited.final_param_stderr.theta6, sector, k);
      out.candidates.push_back({sector, k, energy.value, w.value, Provenance::vqe, energy.std_error,
                                std::sqrt(w.std_error * w.std_error + angle_var)});
    }
    const PoleData& a = out.candidates[out.candidates.size() - 2];
    const PoleData& b = out.candidates.back();
    out.bright.push_back(b.weight > a.weight ? b : a);
  }
  return out;
}

std::vector<PoleData> mirror_poles(const std::vector<PoleData>& particle) {
  std::vector<PoleData> out;
  for (const PoleData& p : particle) {
    if (p.sector != Sector::particle) continue;
    // omega_h = E_GS - E_h = -(E_p - E_GS)  =>  E_h = E_p
    PoleData h = p;
    h.sector = Sector::hole;
    h.k = flip(p.k);
    out.push_back(h);
  }
  return out;
}

HolePart hole_part(const SectorSearch& search, HoleMethod method, const std::vector<PoleData>& particle) {
  HolePart out;
  if (method == HoleMethod::mirror) {
    out.poles = mirror_poles(particle);
    return out;
  }
  out.direct = sector_poles(search, Sector::hole);
  out.poles = out.direct->bright;
  return out;
}

}  // namespace hubbard_greens::greens
