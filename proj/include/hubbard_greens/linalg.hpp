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

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace hubbard_greens {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Thrown when a matrix handed to a Hermitian routine is not Hermitian.
class NotHermitianError : public std::invalid_argument {
 public:
  NotHermitianError(double max_asymmetry, const std::string& what)
      : std::invalid_argument(what), max_asymmetry_(max_asymmetry) {}
  double max_asymmetry() const { return max_asymmetry_; }

 private:
  double max_asymmetry_;
};

class NoConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ascending eigenvalues with matching orthonormal eigenvector columns.
struct EigenSystem {
  RVector eigenvalues;
  CMatrix eigenvectors;
};

struct JacobiOptions {
  double off_diagonal_threshold = 1e-13;
  int max_sweeps = 100;
  double hermiticity_tolerance = 1e-10;
};

/// Largest |A(i,j) - conj(A(j,i))| over all entries.
double max_hermitian_asymmetry(const CMatrix& m);

/// Cyclic complex Jacobi diagonalizer for small Hermitian matrices.
///
/// Eigenvalues come back ascending. Each eigenvector's phase is fixed so that
/// its largest-magnitude component (first one on ties) is real and positive,
/// which makes the output a deterministic function of the input. Within a
/// degenerate multiplet the basis is whatever the rotations produce.
///
/// Throws NotHermitianError if the asymmetry exceeds the tolerance and
/// NoConvergenceError if the off-diagonal norm does not drop below
/// `off_diagonal_threshold * max(1, ||A||_F)` within the sweep budget.
EigenSystem eigensystem(const CMatrix& matrix, const JacobiOptions& options = {});

/// Multiplies `v` by a unit phase so its largest-magnitude entry is real positive.
void fix_phase(Eigen::Ref<CVector> v);

/// |<a|b>|, the phase-insensitive overlap used for state comparisons.
double overlap_magnitude(const CVector& a, const CVector& b);

}  // namespace hubbard_greens
