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

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "hubbard_greens/fock.hpp"

namespace hubbard_greens::six {
namespace {

constexpr double kA = 0.20490833661795968;
constexpr double kB = 0.676766262149984;

CVector ground_vector() {
  CVector v = CVector::Zero(kDim);
  v << kA, kB, -kB, kA, 0, 0;
  return v;
}

TEST(SixDim, LiteralEntries) {
  const CMatrix h = build_six_dim(1.5, 4.0).entries;
  EXPECT_EQ(h(0, 1).real(), -1.5);
  EXPECT_EQ(h(0, 2).real(), 1.5);
  EXPECT_EQ(h(1, 1).real(), -4.0);
  EXPECT_EQ(h(2, 3).real(), 1.5);
  EXPECT_EQ(h(4, 4).real(), -2.0);
  EXPECT_EQ(h(4, 5).real(), 1.5);
  EXPECT_EQ(h(0, 4).real(), 0.0);
  EXPECT_EQ(max_hermitian_asymmetry(h), 0.0);
  EXPECT_THROW(build_six_dim(0.0, 1.0), std::invalid_argument);
}

TEST(SixDim, NonInteractingSpectrum) {
  const EigenSystem es = eigensystem(build_six_dim(1.0, 0.0).entries.topLeftCorner(4, 4));
  EXPECT_NEAR(es.eigenvalues(0), -2.0, 1e-13);
  EXPECT_NEAR(es.eigenvalues(1), 0.0, 1e-13);
  EXPECT_NEAR(es.eigenvalues(2), 0.0, 1e-13);
  EXPECT_NEAR(es.eigenvalues(3), 2.0, 1e-13);
}

TEST(SixDim, GroundVectorIsEigenvector) {
  const CMatrix h = build_six_dim(1.0, 6.0).entries;
  const CVector v = ground_vector();
  EXPECT_NEAR(v.norm(), 1.0, 1e-14);
  EXPECT_LT((h * v + (3.0 + std::sqrt(13.0)) * v).norm(), 1e-13);
}

TEST(SixDim, HoleBlock) {
  const CMatrix h = build_six_dim(1.0, 6.0, Sector::hole).entries;
  EXPECT_EQ(h(4, 5).real(), -1.0);
  const EigenSystem es = eigensystem(h.bottomRightCorner(2, 2));
  EXPECT_NEAR(es.eigenvalues(0), -4.0, 1e-13);
  EXPECT_NEAR(es.eigenvalues(1), -2.0, 1e-13);
}

TEST(BasisMap, LayoutAndFockIndices) {
  const auto particle = basis_map(Sector::particle);
  const int expect_p[] = {3, 9, 6, 12, 13, 7};
  const int expect_h[] = {3, 9, 6, 12, 2, 8};
  const auto hole = basis_map(Sector::hole);
  for (int k = 0; k < kDim; ++k) {
    EXPECT_EQ(particle[k].fock_index, expect_p[k]);
    EXPECT_EQ(hole[k].fock_index, expect_h[k]);
    EXPECT_EQ(particle[k].path, k / 2);
    EXPECT_EQ(static_cast<int>(particle[k].polarization), k % 2);
  }
  EXPECT_EQ(particle[0].fermions, "c+0u c+0d |vac>");
}

TEST(Settings, ReconstructHamiltonian) {
  std::mt19937_64 gen(4);
  std::uniform_real_distribution<double> ut(0.1, 4.0), uu(0.0, 15.0);
  for (Sector sector : {Sector::particle, Sector::hole}) {
    for (int i = 0; i < 20; ++i) {
      const double t = ut(gen), u = uu(gen);
      const std::vector<MeasurementSetting> settings = hamiltonian_settings(t, u, sector);
      ASSERT_EQ(settings.size(), 3u);
      CMatrix sum = CMatrix::Zero(kDim, kDim);
      for (const MeasurementSetting& s : settings) {
        EXPECT_LT((s.rotation * s.rotation.adjoint() - CMatrix::Identity(kDim, kDim)).cwiseAbs().maxCoeff(), 1e-12);
        sum += s.observable();
      }
      EXPECT_LT((sum - build_six_dim(t, u, sector).entries).cwiseAbs().maxCoeff(), 1e-10);
      const std::array<CMatrix, 3> terms = hamiltonian_terms(t, u, sector);
      EXPECT_LT((terms[0] + terms[1] + terms[2] - build_six_dim(t, u, sector).entries).cwiseAbs().maxCoeff(), 1e-14);
    }
  }
}

TEST(Settings, BasisStateExpectations) {
  const std::vector<MeasurementSetting> settings = hamiltonian_settings(1.0, 6.0);
  auto expect = [](const MeasurementSetting& s, int k) { return s.observable()(k, k).real(); };
  EXPECT_NEAR(expect(settings[2], 2), -6.0, 1e-14);
  EXPECT_NEAR(expect(settings[1], 5), 0.0, 1e-13);
  EXPECT_NEAR(expect(settings[0], 0), 0.0, 1e-13);
  // |4>: trailing block diagonal -U/2 only.
  double total = 0.0;
  for (const MeasurementSetting& s : settings) total += expect(s, 4);
  EXPECT_NEAR(total, -3.0, 1e-13);
}

TEST(Settings, ForTermDiagonalizes) {
  CMatrix term = CMatrix::Zero(kDim, kDim);
  term(0, 1) = term(1, 0) = 2.0;
  const MeasurementSetting s = setting_for(term, "x");
  EXPECT_EQ(s.label, "x");
  EXPECT_NEAR(s.outcome_values[0], -2.0, 1e-14);
  EXPECT_NEAR(s.outcome_values[5], 2.0, 1e-14);
  EXPECT_LT((s.observable() - term).norm(), 1e-13);
}

TEST(MomentumBlocks, CreationTable) {
  const double r = 1.0 / std::numbers::sqrt2;
  Eigen::Matrix<double, 2, 4> zero, pi;
  zero << 0, -r, 0, r, r, 0, r, 0;
  pi << 0, r, 0, r, -r, 0, r, 0;
  EXPECT_LT((momentum_creation_block(Momentum::zero) - zero.cast<Complex>()).norm(), 1e-15);
  EXPECT_LT((momentum_creation_block(Momentum::pi) - pi.cast<Complex>()).norm(), 1e-15);
  EXPECT_EQ(transition_block(Sector::particle, Momentum::pi), momentum_creation_block(Momentum::pi));
  EXPECT_EQ(transition_block(Sector::hole, Momentum::zero), momentum_annihilation_block(Momentum::zero));
}

TEST(MomentumBlocks, AnnihilationOnDoubleOccupancy) {
  CVector doubly = CVector::Zero(4);
  doubly(0) = 1.0;
  const CVector out = momentum_annihilation_block(Momentum::zero) * doubly;
  EXPECT_NEAR(std::abs(out(0)), 1.0 / std::numbers::sqrt2, 1e-15);
  EXPECT_NEAR(std::abs(out(1)), 0.0, 1e-15);
}

TEST(MomentumBlocks, CompletenessOverMomenta) {
  std::mt19937_64 gen(9);
  std::normal_distribution<double> g;
  for (Sector s : {Sector::particle, Sector::hole}) {
    const CMatrix b0 = transition_block(s, Momentum::zero);
    const CMatrix bpi = transition_block(s, Momentum::pi);
    for (int c = 0; c < 4; ++c) {
      EXPECT_NEAR(b0.col(c).squaredNorm(), 0.5, 1e-15);
      EXPECT_NEAR(bpi.col(c).squaredNorm(), 0.5, 1e-15);
    }
    for (int i = 0; i < 50; ++i) {
      CVector v(4);
      for (int j = 0; j < 4; ++j) v(j) = Complex(g(gen), g(gen));
      v.normalize();
      EXPECT_NEAR((b0 * v).squaredNorm() + (bpi * v).squaredNorm(), 1.0, 1e-14);
    }
  }
}

TEST(MomentumBlocks, PerMomentumSumRule) {
  const CVector gs = ground_vector().head(4);
  for (Momentum k : {Momentum::zero, Momentum::pi}) {
    const double particle = (momentum_creation_block(k) * gs).squaredNorm();
    const double hole = (momentum_annihilation_block(k) * gs).squaredNorm();
    EXPECT_NEAR(particle + hole, 1.0, 1e-14);
  }
  EXPECT_NEAR((momentum_creation_block(Momentum::pi) * gs).squaredNorm(), (kA + kB) * (kA + kB), 1e-14);
  EXPECT_NEAR((momentum_creation_block(Momentum::zero) * gs).squaredNorm(), (kA - kB) * (kA - kB), 1e-14);
}

TEST(MomentumBlocks, MatchFullOperator) {
  for (Momentum k : {Momentum::zero, Momentum::pi}) {
    const CMatrix full = fock::momentum_annihilator(k).adjoint();
    const auto idx11 = fock::sector_indices(1, 1);
    const auto idx21 = fock::sector_indices(2, 1);
    const CMatrix block = momentum_creation_block(k);
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 4; ++c) EXPECT_EQ(block(r, c), full(idx21[r], idx11[c]));
    }
  }
}

}  // namespace
}  // namespace hubbard_greens::six
