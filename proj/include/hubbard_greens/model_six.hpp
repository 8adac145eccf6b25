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

// Six-state working representation: (1,1) block plus a two-state particle or
// hole block, laid out on the photon's polarization (H, V) x path (0, 1, 2)
// modes as |k> = |pol, path>, k = 2*path + pol.

#include <array>
#include <string>
#include <vector>

#include "hubbard_greens/linalg.hpp"
#include "hubbard_greens/types.hpp"

namespace hubbard_greens::six {

inline constexpr int kDim = 6;

enum class Polarization { H = 0, V = 1 };

struct SixObservable {
  CMatrix entries;  // 6x6 Hermitian
  std::string label;
};

struct BasisEntry {
  Polarization polarization;
  int path;
  int fock_index;        // index in the 16-state Fock space
  std::string fermions;  // creation-operator string acting on |vac>
};

/// |1>..|6> in order, annotated with their fermionic content for `sector`.
std::array<BasisEntry, kDim> basis_map(Sector sector);

/// One projective measurement: rotate by `rotation`, read out the six path/
/// polarization outcomes, and assign `outcome_values[k]` to outcome k. The
/// measured observable is rotation^H * diag(outcome_values) * rotation.
struct MeasurementSetting {
  CMatrix rotation;
  std::array<double, kDim> outcome_values{};
  std::string label;

  CMatrix observable() const;
};

/// Diagonalizes `term` and returns the setting that measures it.
MeasurementSetting setting_for(const CMatrix& term, std::string label);

/// Particle variant: the printed six-state matrix with the (2,1) block
/// [[-U/2, t], [t, -U/2]]. Hole variant: same (1,1) block, trailing block
/// taken from the Fock projection onto (0,1). Throws for t <= 0.
SixObservable build_six_dim(double t, double u, Sector sector = Sector::particle);

/// The three additive pieces of build_six_dim:
///   t Z (x) (|p0><p1| + |p1><p0|),
///   t X (x) (-|p0><p0| + |p1><p1| + s |p2><p2|),   s = sign of the trailing hopping,
///   diag(0, -U, -U, 0, -U/2, -U/2).
std::array<CMatrix, 3> hamiltonian_terms(double t, double u, Sector sector = Sector::particle);

std::vector<MeasurementSetting> hamiltonian_settings(double t, double u, Sector sector = Sector::particle);

/// Matrix of c~+_{k up} from the (1,1) basis (columns) to the (2,1) basis (rows).
CMatrix momentum_creation_block(Momentum k);

/// Matrix of c~_{k up} from the (1,1) basis (columns) to the (0,1) basis (rows).
CMatrix momentum_annihilation_block(Momentum k);

/// Block connecting the (1,1) states to the appended sector of `sector`.
inline CMatrix transition_block(Sector sector, Momentum k) {
  return sector == Sector::particle ? momentum_creation_block(k) : momentum_annihilation_block(k);
}

}  // namespace hubbard_greens::six
