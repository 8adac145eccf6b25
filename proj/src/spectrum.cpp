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

#include "hubbard_greens/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hubbard_greens {

std::vector<double> uniform_grid(double lo, double hi, int points) {
  if (points < 2 || !(hi > lo)) {
    throw std::invalid_argument("uniform_grid: need points >= 2 and hi > lo");
  }
  std::vector<double> grid(static_cast<std::size_t>(points));
  const double step = (hi - lo) / (points - 1);
  for (int i = 0; i < points; ++i) grid[static_cast<std::size_t>(i)] = lo + step * i;
  grid.back() = hi;
  return grid;
}

void check_spectrum_inputs(const std::vector<double>& omega_grid, double eta) {
  if (!(eta > 0.0)) throw std::invalid_argument("broadening eta must be > 0");
  if (omega_grid.empty()) throw std::invalid_argument("omega grid is empty");
  for (std::size_t i = 1; i < omega_grid.size(); ++i) {
    if (!(omega_grid[i] > omega_grid[i - 1])) {
      throw std::invalid_argument("omega grid must be strictly ascending");
    }
  }
}

namespace greens {
namespace {

double lorentzian(double x, double eta) { return eta / (std::numbers::pi * (x * x + eta * eta)); }

// d/dx of lorentzian(x, eta).
double lorentzian_slope(double x, double eta) {
  const double d = x * x + eta * eta;
  return -2.0 * eta * x / (std::numbers::pi * d * d);
}

}  // namespace

SpectrumSeries spectral_function(const std::vector<PoleData>& poles, double ground_energy,
                                 const std::vector<double>& omega_grid, double eta) {
  check_spectrum_inputs(omega_grid, eta);
  SpectrumSeries out;
  out.omega_grid = omega_grid;
  out.eta = eta;
  out.poles = poles;
  out.ground_energy = ground_energy;
  out.a_k0.assign(omega_grid.size(), 0.0);
  out.a_kpi.assign(omega_grid.size(), 0.0);
  for (std::size_t i = 0; i < omega_grid.size(); ++i) {
    for (const PoleData& pole : poles) {
      const double w = std::max(pole.weight, 0.0);
      out.values(pole.k)[i] += w * lorentzian(omega_grid[i] - pole.position(ground_energy), eta);
    }
  }
  return out;
}

SpectrumError propagate_error(const SpectrumSeries& series) {
  SpectrumError err;
  err.sigma_k0.assign(series.omega_grid.size(), 0.0);
  err.sigma_kpi.assign(series.omega_grid.size(), 0.0);
  for (Momentum k : {Momentum::zero, Momentum::pi}) {
    std::vector<double>& sigma = k == Momentum::zero ? err.sigma_k0 : err.sigma_kpi;
    for (std::size_t i = 0; i < series.omega_grid.size(); ++i) {
      const double omega = series.omega_grid[i];
      double variance = 0.0;
      double d_ground = 0.0;
      for (const PoleData& pole : series.poles) {
        if (pole.k != k) continue;
        const double x = omega - pole.position(series.ground_energy);
        const double slope = std::max(pole.weight, 0.0) * lorentzian_slope(x, series.eta);
        // dA/dE_n = -slope for particle poles, +slope for hole poles; dA/dE_GS is the opposite.
        const double d_energy = pole.sector == Sector::particle ? -slope : slope;
        d_ground -= d_energy;
        variance += std::pow(lorentzian(x, series.eta) * pole.weight_stderr, 2) +
                    std::pow(d_energy * pole.energy_stderr, 2);
      }
      variance += std::pow(d_ground * series.ground_energy_stderr, 2);
      sigma[i] = std::sqrt(variance);
    }
  }
  return err;
}

double total_weight(const std::vector<PoleData>& poles, Momentum k) {
  double sum = 0.0;
  for (const PoleData& p : poles) {
    if (p.k == k) sum += p.weight;
  }
  return sum;
}

}  // namespace greens
}  // namespace hubbard_greens
