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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

namespace hubbard_greens {

double max_hermitian_asymmetry(const CMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("matrix is not square");
  }
  double worst = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i; j < m.cols(); ++j) {
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return worst;
}

void fix_phase(Eigen::Ref<CVector> v) {
  Eigen::Index best = 0;
  double best_mag = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    // Small slack so that numerically tied components resolve to the first.
    if (std::abs(v(i)) > best_mag + 1e-12) {
      best_mag = std::abs(v(i));
      best = i;
    }
  }
  if (best_mag <= 0.0) return;
  const Complex phase = std::conj(v(best)) / std::abs(v(best));
  v *= phase;
  v(best) = Complex(std::abs(v(best)), 0.0);
}

double overlap_magnitude(const CVector& a, const CVector& b) {
  return std::abs(a.dot(b));
}

namespace {

double off_diagonal_norm(const CMatrix& a) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

// Zeroes a(p,q) with the unitary U = diag-phase * real Givens rotation:
//   U(p,p) = c, U(p,q) = s, U(q,p) = -s e^{-i phi}, U(q,q) = c e^{-i phi},
// where a(p,q) = r e^{i phi}. Applies A <- U^H A U and V <- V U.
void rotate(CMatrix& a, CMatrix& v, Eigen::Index p, Eigen::Index q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const Complex phase = std::conj(apq) / r;  // e^{-i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * r);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex upp = c, upq = s, uqp = -s * phase, uqq = c * phase;
  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex akp = a(k, p), akq = a(k, q);
    a(k, p) = akp * upp + akq * uqp;
    a(k, q) = akp * upq + akq * uqq;
    const Complex vkp = v(k, p), vkq = v(k, q);
    v(k, p) = vkp * upp + vkq * uqp;
    v(k, q) = vkp * upq + vkq * uqq;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex apk = a(p, k), aqk = a(q, k);
    a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
    a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

}  // namespace

EigenSystem eigensystem(const CMatrix& matrix, const JacobiOptions& options) {
  const double asym = max_hermitian_asymmetry(matrix);
  if (asym > options.hermiticity_tolerance) {
    std::ostringstream msg;
    msg << "eigensystem: matrix is not Hermitian (max asymmetry " << asym << ")";
    throw NotHermitianError(asym, msg.str());
  }
  const Eigen::Index n = matrix.rows();
  CMatrix a = 0.5 * (matrix + matrix.adjoint());
  CMatrix v = CMatrix::Identity(n, n);
  const double threshold = options.off_diagonal_threshold * std::max(1.0, a.norm());

  bool converged = off_diagonal_norm(a) < threshold;
  for (int sweep = 0; sweep < options.max_sweeps && !converged; ++sweep) {
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        rotate(a, v, p, q);
      }
    }
    converged = off_diagonal_norm(a) < threshold;
  }
  if (!converged) {
    throw NoConvergenceError("eigensystem: Jacobi sweep budget exhausted");
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
    return a(x, x).real() < a(y, y).real();
  });

  EigenSystem out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Index src = order[static_cast<std::size_t>(i)];
    out.eigenvalues(i) = a(src, src).real();
    out.eigenvectors.col(i) = v.col(src);
    fix_phase(out.eigenvectors.col(i));
  }
  return out;
}

}  // namespace hubbard_greens
