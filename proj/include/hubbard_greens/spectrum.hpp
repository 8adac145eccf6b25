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

#include <vector>

#include "hubbard_greens/types.hpp"

namespace hubbard_greens {

/// One Lehmann pole of A_{k up}(omega).
///
/// `energy` is the eigenenergy of the particle/hole state; the pole sits at
/// omega = energy - E_GS (particle) or omega = E_GS - energy (hole).
struct PoleData {
  Sector sector = Sector::particle;
  Momentum k = Momentum::zero;
  double energy = 0.0;
  double weight = 0.0;
  Provenance provenance = Provenance::exact;
  double energy_stderr = 0.0;
  double weight_stderr = 0.0;

  double position(double ground_energy) const {
    return sector == Sector::particle ? energy - ground_energy : ground_energy - energy;
  }
};

struct SpectrumSeries {
  std::vector<double> omega_grid;
  std::vector<double> a_k0;
  std::vector<double> a_kpi;
  double eta = 0.1;
  std::vector<PoleData> poles;
  double ground_energy = 0.0;
  double ground_energy_stderr = 0.0;

  const std::vector<double>& values(Momentum k) const { return k == Momentum::zero ? a_k0 : a_kpi; }
  std::vector<double>& values(Momentum k) { return k == Momentum::zero ? a_k0 : a_kpi; }
};

/// `points` uniformly spaced values on [lo, hi]; throws for points < 2 or hi <= lo.
std::vector<double> uniform_grid(double lo, double hi, int points);

/// Throws std::invalid_argument unless eta > 0 and the grid is non-empty and
/// strictly ascending.
void check_spectrum_inputs(const std::vector<double>& omega_grid, double eta);

namespace greens {

/// Lorentzian form of the Lehmann sum: each pole adds
/// (w/pi) * eta / ((omega - position)^2 + eta^2) to its momentum channel.
SpectrumSeries spectral_function(const std::vector<PoleData>& poles, double ground_energy,
                                 const std::vector<double>& omega_grid, double eta);

/// Linearized one-sigma uncertainty of A(omega) per channel, from the pole
/// weight, pole energy and ground energy stderrs. The ground energy enters
/// every pole position, so its contribution is summed before squaring.
struct SpectrumError {
  std::vector<double> sigma_k0;
  std::vector<double> sigma_kpi;
  const std::vector<double>& sigma(Momentum k) const { return k == Momentum::zero ? sigma_k0 : sigma_kpi; }
};
SpectrumError propagate_error(const SpectrumSeries& series);

/// Total pole weight in channel k.
double total_weight(const std::vector<PoleData>& poles, Momentum k);

}  // namespace greens
}  // namespace hubbard_greens
