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

#include "hubbard_greens/model_six.hpp"

#include <stdexcept>

#include "hubbard_greens/fock.hpp"

namespace hubbard_greens::six {
namespace {

CMatrix block_between(const CMatrix& op, const std::vector<int>& rows, const std::vector<int>& cols) {
  CMatrix out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = op(rows[i], cols[j]);
    }
  }
  return out;
}

// Pauli Z, X on polarization tensored with a path operator; pol is the fast index.
CMatrix pol_path(const Eigen::Matrix2cd& pol, const Eigen::Matrix3cd& path) {
  CMatrix out = CMatrix::Zero(kDim, kDim);
  for (int pa = 0; pa < 3; ++pa) {
    for (int pb = 0; pb < 3; ++pb) {
      for (int sa = 0; sa < 2; ++sa) {
        for (int sb = 0; sb < 2; ++sb) out(2 * pa + sa, 2 * pb + sb) = path(pa, pb) * pol(sa, sb);
      }
    }
  }
  return out;
}

std::string describe(int fock_index) {
  static const char* names[] = {"c+0u", "c+0d", "c+1u", "c+1d"};
  std::string s;
  for (int j = 0; j < fock::kModes; ++j) {
    if ((fock_index >> j) & 1) s += std::string(s.empty() ? "" : " ") + names[j];
  }
  return s.empty() ? "vac" : s + " |vac>";
}

}  // namespace

std::array<BasisEntry, kDim> basis_map(Sector sector) {
  std::vector<int> fock_basis = fock::sector_indices(1, 1);
  const std::vector<int> extra = sector == Sector::particle ? fock::sector_indices(2, 1) : fock::sector_indices(0, 1);
  fock_basis.insert(fock_basis.end(), extra.begin(), extra.end());
  std::array<BasisEntry, kDim> out;
  for (int k = 0; k < kDim; ++k) {
    const int idx = fock_basis[static_cast<std::size_t>(k)];
    out[static_cast<std::size_t>(k)] = {static_cast<Polarization>(k % 2), k / 2, idx, describe(idx)};
  }
  return out;
}

CMatrix MeasurementSetting::observable() const {
  Eigen::VectorXcd d(kDim);
  for (int k = 0; k < kDim; ++k) d(k) = outcome_values[static_cast<std::size_t>(k)];
  return rotation.adjoint() * d.asDiagonal() * rotation;
}

MeasurementSetting setting_for(const CMatrix& term, std::string label) {
  const EigenSystem es = eigensystem(term);
  MeasurementSetting s;
  s.rotation = es.eigenvectors.adjoint();
  for (int k = 0; k < kDim; ++k) s.outcome_values[static_cast<std::size_t>(k)] = es.eigenvalues(k);
  s.label = std::move(label);
  return s;
}

SixObservable build_six_dim(double t, double u, Sector sector) {
  if (!(t > 0.0)) throw std::invalid_argument("build_six_dim: hopping t must be > 0");
  // clang-format off
  Eigen::Matrix<double, 6, 6> m;
  m <<  0, -t,  t,  0,    0,    0,
       -t, -u,  0, -t,    0,    0,
        t,  0, -u,  t,    0,    0,
        0, -t,  t,  0,    0,    0,
        0,  0,  0,  0, -u/2,    t,
        0,  0,  0,  0,    t, -u/2;
  // clang-format on
  SixObservable out{m.cast<Complex>(), "H_six(particle)"};
  if (sector == Sector::hole) {
    const std::vector<int> hole = fock::sector_indices(0, 1);
    out.entries.bottomRightCorner(2, 2) = fock::project(fock::build_hubbard(t, u), hole);
    out.label = "H_six(hole)";
  }
  return out;
}

std::array<CMatrix, 3> hamiltonian_terms(double t, double u, Sector sector) {
  const CMatrix h = build_six_dim(t, u, sector).entries;
  const double trailing = h(4, 5).real() / t;
  Eigen::Matrix2cd z, x;
  z << 1, 0, 0, -1;
  x << 0, 1, 1, 0;
  Eigen::Matrix3cd hop = Eigen::Matrix3cd::Zero();
  hop(0, 1) = hop(1, 0) = 1.0;
  Eigen::Matrix3cd mix = Eigen::Matrix3cd::Zero();
  mix(0, 0) = -1.0;
  mix(1, 1) = 1.0;
  mix(2, 2) = trailing;
  CMatrix diag = CMatrix::Zero(kDim, kDim);
  diag.diagonal() = h.diagonal();
  return {t * pol_path(z, hop), t * pol_path(x, mix), diag};
}

std::vector<MeasurementSetting> hamiltonian_settings(double t, double u, Sector sector) {
  const std::array<CMatrix, 3> terms = hamiltonian_terms(t, u, sector);
  std::vector<MeasurementSetting> out;
  out.push_back(setting_for(terms[0], "tZ(x)hop01"));
  out.push_back(setting_for(terms[1], "tX(x)mix"));
  MeasurementSetting diag;
  diag.rotation = CMatrix::Identity(kDim, kDim);
  for (int k = 0; k < kDim; ++k) diag.outcome_values[static_cast<std::size_t>(k)] = terms[2](k, k).real();
  diag.label = "diagonal";
  out.push_back(std::move(diag));
  return out;
}

CMatrix momentum_creation_block(Momentum k) {
  return block_between(fock::momentum_annihilator(k).adjoint(), fock::sector_indices(2, 1), fock::sector_indices(1, 1));
}

CMatrix momentum_annihilation_block(Momentum k) {
  return block_between(fock::momentum_annihilator(k), fock::sector_indices(0, 1), fock::sector_indices(1, 1));
}

}  // namespace hubbard_greens::six
