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

// Exact reference implementation on the full 16-state Fock space of the
// two-site Hubbard model.
//
// Modes are ordered (site0 up, site0 down, site1 up, site1 down) and mode j
// is bit j of the Fock index. A basis state with occupied modes
// j1 < j2 < ... is c+_{j1} c+_{j2} ... |vac>, so the Jordan-Wigner string of
// c+_j / c_j is (-1)^(number of occupied modes below j).

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "hubbard_greens/linalg.hpp"
#include "hubbard_greens/spectrum.hpp"
#include "hubbard_greens/types.hpp"

namespace hubbard_greens::fock {

inline constexpr int kModes = 4;
inline constexpr int kDim = 16;

enum class Site { zero = 0, one = 1 };
enum class Spin { up = 0, down = 1 };
enum class Ladder { create, annihilate };

constexpr int mode_index(Site site, Spin spin) {
  return 2 * static_cast<int>(site) + static_cast<int>(spin);
}

/// Occupation pattern of one Fock basis state.
struct FockBasisState {
  std::array<bool, kModes> occupied{};

  static FockBasisState from_index(int index);
  int index() const;
  int count(Spin spin) const;
};

/// 16x16 matrix of c_{site,spin} or its adjoint.
CMatrix fermion_operator(Site site, Spin spin, Ladder kind);

CMatrix number_operator(Site site, Spin spin);
CMatrix total_number(Spin spin);

/// H = -t sum_s (c+_0s c_1s + h.c.) + U sum_i n_iu n_id - U/2 sum_is n_is.
/// Throws std::invalid_argument for t <= 0 or U < 0.
CMatrix build_hubbard(double t, double u);

/// Momentum annihilator (c_0up + (-1)^{k/pi} c_1up)/sqrt(2) on the Fock space.
CMatrix momentum_annihilator(Momentum k);

/// Fock indices of the (n_up, n_down) sector.
///
/// (1,1), (2,1) and (0,1) follow the ordered bases used by the six-state
/// model; the (0,1) basis is {c+_0down, c+_1down}|vac>. Other sectors are in
/// ascending index order. Throws std::invalid_argument outside [0, 2].
std::vector<int> sector_indices(int n_up, int n_down);

/// Rows/columns `indices` of `m`, in that order.
CMatrix project(const CMatrix& m, const std::vector<int>& indices);

struct SixDimCheck {
  Sector sector = Sector::particle;
  double max_deviation = 0.0;
  /// (row, col) pairs (0-based) whose deviation exceeds the tolerance.
  std::vector<std::pair<int, int>> flagged;
  /// Sign of the off-diagonal hopping entry in the trailing 2x2 block of the
  /// Fock projection: +1 means +t, -1 means -t.
  int trailing_offdiag_sign = 0;
  CMatrix projected;
  bool ok() const { return flagged.empty(); }
};

/// Projects build_hubbard onto (1,1) u (2,1) (particle) or (1,1) u (0,1)
/// (hole) and compares entrywise against `reference`.
SixDimCheck verify_six_dim(double t, double u, Sector sector, const CMatrix& reference,
                           double tolerance = 1e-12);

/// Same check against model_six::build_six_dim.
SixDimCheck verify_six_dim(double t, double u, Sector sector = Sector::particle);

/// Full Lehmann pole list for both momenta: every eigenstate of the
/// 16-dimensional Hamiltonian is visited, weights with degenerate energies
/// (|dE| < 1e-9 t) are merged, and poles with weight <= `min_weight` are
/// dropped.
struct ExactPoles {
  double ground_energy = 0.0;
  CVector ground_state;
  std::vector<PoleData> poles;
};
ExactPoles exact_poles(double t, double u, double min_weight = 1e-14);

/// A(omega) evaluated directly as -(1/pi) Im sum_n w_n / (omega - pole_n + i eta)
/// over the ungrouped eigenstates. Throws std::invalid_argument for eta <= 0 or
/// an empty / non-ascending grid.
SpectrumSeries exact_spectral_function(double t, double u, const std::vector<double>& omega_grid,
                                       double eta);

}  // namespace hubbard_greens::fock
