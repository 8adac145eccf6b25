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

#include "hubbard_greens/linalg.hpp"

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

namespace hubbard_greens {
namespace {

CMatrix random_hermitian(int n, std::mt19937_64& gen) {
  std::normal_distribution<double> g;
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = Complex(g(gen), g(gen));
  }
  return 0.5 * (m + m.adjoint());
}

TEST(Eigensystem, IdentityGivesStandardBasis) {
  const EigenSystem es = eigensystem(CMatrix::Identity(5, 5));
  for (int i = 0; i < 5; ++i) EXPECT_DOUBLE_EQ(es.eigenvalues(i), 1.0);
  EXPECT_LT((es.eigenvectors - CMatrix::Identity(5, 5)).norm(), 1e-15);
}

TEST(Eigensystem, ParticleBlockTwoByTwo) {
  CMatrix m(2, 2);
  m << -3, 1, 1, -3;
  const EigenSystem es = eigensystem(m);
  EXPECT_NEAR(es.eigenvalues(0), -4.0, 1e-14);
  EXPECT_NEAR(es.eigenvalues(1), -2.0, 1e-14);
  // (1, -1)/sqrt2 for -4 and (1, 1)/sqrt2 for -2, up to phase.
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(overlap_magnitude(es.eigenvectors.col(0), Eigen::Vector2cd(r, -r)), 1.0, 1e-14);
  EXPECT_NEAR(overlap_magnitude(es.eigenvectors.col(1), Eigen::Vector2cd(r, r)), 1.0, 1e-14);
  const double resid = (m * es.eigenvectors - es.eigenvectors * es.eigenvalues.cast<Complex>().asDiagonal()).norm();
  EXPECT_LT(resid, 1e-13);
}

TEST(Eigensystem, HalfFilledBlockAtUSix) {
  CMatrix m(4, 4);
  m << 0, -1, 1, 0, -1, -6, 0, -1, 1, 0, -6, 1, 0, -1, 1, 0;
  const EigenSystem es = eigensystem(m);
  // lambda^2 + 6 lambda - 4 = 0 on the symmetric pair; -6 and 0 on the rest.
  EXPECT_NEAR(es.eigenvalues(0), -3.0 - std::sqrt(13.0), 1e-13);
  EXPECT_NEAR(es.eigenvalues(1), -6.0, 1e-13);
  EXPECT_NEAR(es.eigenvalues(2), 0.0, 1e-13);
  EXPECT_NEAR(es.eigenvalues(3), -3.0 + std::sqrt(13.0), 1e-13);
  EXPECT_NEAR(es.eigenvalues(0), -6.6056, 1e-4);
}

TEST(Eigensystem, AgreesWithEigenOnRandomHermitian) {
  std::mt19937_64 gen(42);
  for (int n : {1, 2, 3, 6, 9, 16}) {
    for (int rep = 0; rep < 10; ++rep) {
      const CMatrix m = random_hermitian(n, gen);
      const EigenSystem es = eigensystem(m);
      Eigen::SelfAdjointEigenSolver<CMatrix> ref(m);
      const double scale = std::max(1.0, m.operatorNorm());
      EXPECT_LT((es.eigenvalues - ref.eigenvalues()).cwiseAbs().maxCoeff(), 1e-12 * scale);
      const double resid =
          (m * es.eigenvectors - es.eigenvectors * es.eigenvalues.cast<Complex>().asDiagonal()).colwise().norm().maxCoeff();
      EXPECT_LT(resid, 1e-10 * scale);
      EXPECT_LT((es.eigenvectors.adjoint() * es.eigenvectors - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-10);
      for (int i = 1; i < n; ++i) EXPECT_LE(es.eigenvalues(i - 1), es.eigenvalues(i));
    }
  }
}

TEST(Eigensystem, PhaseConventionAndDeterminism) {
  std::mt19937_64 gen(3);
  const CMatrix m = random_hermitian(7, gen);
  const EigenSystem a = eigensystem(m);
  const EigenSystem b = eigensystem(m);
  EXPECT_EQ(a.eigenvalues, b.eigenvalues);
  EXPECT_EQ(a.eigenvectors, b.eigenvectors);
  for (int c = 0; c < 7; ++c) {
    Eigen::Index arg = 0;
    a.eigenvectors.col(c).cwiseAbs().maxCoeff(&arg);
    EXPECT_EQ(a.eigenvectors(arg, c).imag(), 0.0);
    EXPECT_GT(a.eigenvectors(arg, c).real(), 0.0);
  }
}

TEST(Eigensystem, RejectsNonHermitianWithAsymmetry) {
  CMatrix m(2, 2);
  m << 1, 2, 0.5, 1;
  try {
    eigensystem(m);
    FAIL() << "expected NotHermitianError";
  } catch (const NotHermitianError& e) {
    EXPECT_DOUBLE_EQ(e.max_asymmetry(), 1.5);
  }
}

TEST(Eigensystem, ReportsExhaustedSweepBudget) {
  std::mt19937_64 gen(5);
  JacobiOptions opts;
  opts.max_sweeps = 1;
  EXPECT_THROW(eigensystem(random_hermitian(8, gen), opts), NoConvergenceError);
}

}  // namespace
}  // namespace hubbard_greens
