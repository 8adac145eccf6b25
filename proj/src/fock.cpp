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

#include "hubbard_greens/fock.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hubbard_greens/model_six.hpp"

namespace hubbard_greens::fock {

FockBasisState FockBasisState::from_index(int index) {
  if (index < 0 || index >= kDim) throw std::invalid_argument("Fock index out of range");
  FockBasisState s;
  for (int j = 0; j < kModes; ++j) s.occupied[static_cast<std::size_t>(j)] = ((index >> j) & 1) != 0;
  return s;
}

int FockBasisState::index() const {
  int idx = 0;
  for (int j = 0; j < kModes; ++j) {
    if (occupied[static_cast<std::size_t>(j)]) idx |= 1 << j;
  }
  return idx;
}

int FockBasisState::count(Spin spin) const {
  const int s = static_cast<int>(spin);
  return static_cast<int>(occupied[static_cast<std::size_t>(s)]) +
         static_cast<int>(occupied[static_cast<std::size_t>(2 + s)]);
}

CMatrix fermion_operator(Site site, Spin spin, Ladder kind) {
  const int mode = mode_index(site, spin);
  const unsigned below = (1u << mode) - 1u;
  CMatrix c = CMatrix::Zero(kDim, kDim);
  for (int n = 0; n < kDim; ++n) {
    if (((n >> mode) & 1) == 0) continue;
    const int m = n ^ (1 << mode);
    const double sign = (std::popcount(static_cast<unsigned>(n) & below) % 2 == 0) ? 1.0 : -1.0;
    c(m, n) = sign;  // c_mode |n> = sign |m>
  }
  return kind == Ladder::annihilate ? c : CMatrix(c.adjoint());
}

CMatrix number_operator(Site site, Spin spin) {
  return fermion_operator(site, spin, Ladder::create) * fermion_operator(site, spin, Ladder::annihilate);
}

CMatrix total_number(Spin spin) { return number_operator(Site::zero, spin) + number_operator(Site::one, spin); }

CMatrix build_hubbard(double t, double u) {
  if (!(t > 0.0)) throw std::invalid_argument("build_hubbard: hopping t must be > 0");
  if (!(u >= 0.0)) throw std::invalid_argument("build_hubbard: repulsion U must be >= 0");
  CMatrix h = CMatrix::Zero(kDim, kDim);
  for (Spin s : {Spin::up, Spin::down}) {
    const CMatrix hop = fermion_operator(Site::zero, s, Ladder::create) * fermion_operator(Site::one, s, Ladder::annihilate);
    h -= t * (hop + hop.adjoint());
  }
  for (Site i : {Site::zero, Site::one}) {
    const CMatrix nu = number_operator(i, Spin::up);
    const CMatrix nd = number_operator(i, Spin::down);
    h += u * nu * nd - 0.5 * u * (nu + nd);
  }
  return h;
}

CMatrix momentum_annihilator(Momentum k) {
  return (fermion_operator(Site::zero, Spin::up, Ladder::annihilate) +
          momentum_sign(k) * fermion_operator(Site::one, Spin::up, Ladder::annihilate)) /
         std::numbers::sqrt2;
}

namespace {

constexpr int bits(std::initializer_list<int> modes) {
  int idx = 0;
  for (int m : modes) idx |= 1 << m;
  return idx;
}

constexpr int u0 = mode_index(Site::zero, Spin::up);
constexpr int d0 = mode_index(Site::zero, Spin::down);
constexpr int u1 = mode_index(Site::one, Spin::up);
constexpr int d1 = mode_index(Site::one, Spin::down);

}  // namespace

std::vector<int> sector_indices(int n_up, int n_down) {
  if (n_up < 0 || n_up > 2 || n_down < 0 || n_down > 2) {
    throw std::invalid_argument("sector_indices: particle numbers must lie in [0, 2]");
  }
  if (n_up == 1 && n_down == 1) {
    return {bits({u0, d0}), bits({u0, d1}), bits({d0, u1}), bits({u1, d1})};
  }
  if (n_up == 2 && n_down == 1) return {bits({u0, u1, d1}), bits({u0, d0, u1})};
  if (n_up == 0 && n_down == 1) return {bits({d0}), bits({d1})};
  std::vector<int> out;
  for (int idx = 0; idx < kDim; ++idx) {
    const FockBasisState s = FockBasisState::from_index(idx);
    if (s.count(Spin::up) == n_up && s.count(Spin::down) == n_down) out.push_back(idx);
  }
  return out;
}

CMatrix project(const CMatrix& m, const std::vector<int>& indices) {
  const auto n = static_cast<Eigen::Index>(indices.size());
  CMatrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      out(i, j) = m(indices[static_cast<std::size_t>(i)], indices[static_cast<std::size_t>(j)]);
    }
  }
  return out;
}

SixDimCheck verify_six_dim(double t, double u, Sector sector, const CMatrix& reference, double tolerance) {
  std::vector<int> basis = sector_indices(1, 1);
  const std::vector<int> extra = sector == Sector::particle ? sector_indices(2, 1) : sector_indices(0, 1);
  basis.insert(basis.end(), extra.begin(), extra.end());

  // t = 0 is allowed here so the hopping-free limit can be inspected; build the
  // Hamiltonian term by term rather than through build_hubbard's guard.
  CMatrix h;
  if (t > 0.0) {
    h = build_hubbard(t, u);
  } else {
    h = CMatrix::Zero(kDim, kDim);
    for (Site i : {Site::zero, Site::one}) {
      const CMatrix nu = number_operator(i, Spin::up);
      const CMatrix nd = number_operator(i, Spin::down);
      h += u * nu * nd - 0.5 * u * (nu + nd);
    }
  }

  SixDimCheck check;
  check.sector = sector;
  check.projected = project(h, basis);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      const double dev = std::abs(check.projected(i, j) - reference(i, j));
      check.max_deviation = std::max(check.max_deviation, dev);
      if (dev > tolerance) check.flagged.emplace_back(i, j);
    }
  }
  const double offdiag = check.projected(4, 5).real();
  check.trailing_offdiag_sign = offdiag > 0.0 ? 1 : (offdiag < 0.0 ? -1 : 0);
  return check;
}

SixDimCheck verify_six_dim(double t, double u, Sector sector) {
  return verify_six_dim(t, u, sector, six::build_six_dim(t, u, sector).entries);
}

namespace {

struct RawPole {
  Sector sector;
  Momentum k;
  double energy;
  double weight;
};

// Every (eigenstate, sector, momentum) amplitude, ungrouped.
std::vector<RawPole> lehmann_terms(const EigenSystem& es) {
  const CVector gs = es.eigenvectors.col(0);
  std::vector<RawPole> out;
  for (Momentum k : {Momentum::zero, Momentum::pi}) {
    const CMatrix c = momentum_annihilator(k);
    const CVector added = c.adjoint() * gs;
    const CVector removed = c * gs;
    for (Eigen::Index n = 0; n < es.eigenvalues.size(); ++n) {
      const CVector v = es.eigenvectors.col(n);
      out.push_back({Sector::particle, k, es.eigenvalues(n), std::norm(v.dot(added))});
      out.push_back({Sector::hole, k, es.eigenvalues(n), std::norm(v.dot(removed))});
    }
  }
  return out;
}

EigenSystem ground_checked_eigensystem(double t, double u) {
  EigenSystem es = eigensystem(build_hubbard(t, u));
  if (es.eigenvalues(1) - es.eigenvalues(0) < 1e-9 * t) {
    throw std::runtime_error("exact oracle: ground state is degenerate");
  }
  return es;
}

}  // namespace

ExactPoles exact_poles(double t, double u, double min_weight) {
  const EigenSystem es = ground_checked_eigensystem(t, u);
  ExactPoles out;
  out.ground_energy = es.eigenvalues(0);
  out.ground_state = es.eigenvectors.col(0);
  const double group_tol = 1e-9 * t;
  for (const RawPole& term : lehmann_terms(es)) {
    PoleData* match = nullptr;
    for (PoleData& p : out.poles) {
      if (p.sector == term.sector && p.k == term.k && std::abs(p.energy - term.energy) < group_tol) {
        match = &p;
        break;
      }
    }
    if (match != nullptr) {
      match->weight += term.weight;
    } else {
      out.poles.push_back({term.sector, term.k, term.energy, term.weight, Provenance::exact, 0.0, 0.0});
    }
  }
  std::erase_if(out.poles, [&](const PoleData& p) { return p.weight <= min_weight; });
  return out;
}

SpectrumSeries exact_spectral_function(double t, double u, const std::vector<double>& omega_grid, double eta) {
  check_spectrum_inputs(omega_grid, eta);
  const EigenSystem es = ground_checked_eigensystem(t, u);
  const double e_gs = es.eigenvalues(0);
  const std::vector<RawPole> terms = lehmann_terms(es);

  SpectrumSeries out;
  out.omega_grid = omega_grid;
  out.eta = eta;
  out.ground_energy = e_gs;
  out.poles = exact_poles(t, u).poles;
  out.a_k0.assign(omega_grid.size(), 0.0);
  out.a_kpi.assign(omega_grid.size(), 0.0);
  for (std::size_t i = 0; i < omega_grid.size(); ++i) {
    const double omega = omega_grid[i];
    Complex g0 = 0.0, gpi = 0.0;
    for (const RawPole& term : terms) {
      const Complex denom = term.sector == Sector::particle ? Complex(omega + e_gs - term.energy, eta)
                                                            : Complex(omega - e_gs + term.energy, eta);
      (term.k == Momentum::zero ? g0 : gpi) += term.weight / denom;
    }
    out.a_k0[i] = -g0.imag() / std::numbers::pi;
    out.a_kpi[i] = -gpi.imag() / std::numbers::pi;
  }
  return out;
}

}  // namespace hubbard_greens::fock
