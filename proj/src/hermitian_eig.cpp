// Copyright 2026 The qsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qsim/errors.hpp"
#include "qsim/linalg.hpp"

namespace qsim {

namespace {

// Sweeps stop once the off-diagonal mass is at rounding level.
constexpr double kConvergedRelative = 1e-14;
// Entries below this (relative to ||A||_HS) are not worth a rotation.
constexpr double kSkipRelative = 1e-18;

double off_diagonal_norm(const ComplexMatrix &a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return std::sqrt(s);
}

/*
 * Annihilate a(p,q) with V = D R acting on columns p, q, where
 * D = diag(1, e^{-i phi}) makes the pivot real and R is the classical real
 * Jacobi rotation [[c, s], [-s, c]]. Then a <- V* a V and vecs <- vecs V.
 */
void rotate(ComplexMatrix &a, ComplexMatrix &vecs, std::size_t p, std::size_t q) {
  const Cplx apq = a(p, q);
  const double g = std::abs(apq);
  const Cplx phase = apq / g;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double tau = (aqq - app) / (2.0 * g);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Cplx vqp = -s * std::conj(phase);
  const Cplx vqq = c * std::conj(phase);
  const std::size_t n = a.rows();

  // a <- a V
  for (std::size_t k = 0; k < n; ++k) {
    const Cplx akp = a(k, p);
    const Cplx akq = a(k, q);
    a(k, p) = akp * c + akq * vqp;
    a(k, q) = akp * s + akq * vqq;
  }
  // a <- V* a
  for (std::size_t k = 0; k < n; ++k) {
    const Cplx apk = a(p, k);
    const Cplx aqk = a(q, k);
    a(p, k) = c * apk + std::conj(vqp) * aqk;
    a(q, k) = s * apk + std::conj(vqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    const Cplx ekp = vecs(k, p);
    const Cplx ekq = vecs(k, q);
    vecs(k, p) = ekp * c + ekq * vqp;
    vecs(k, q) = ekp * s + ekq * vqq;
  }
}

}  // namespace

SpectralDecomp hermitian_eig(const ComplexMatrix &input, double tol, int max_sweeps) {
  if (!input.is_square() || input.empty()) {
    throw DimensionError("hermitian_eig: expected a non-empty square matrix");
  }
  if (!is_hermitian(input, tol)) {
    throw NotHermitianError("hermitian_eig: input is not Hermitian within " +
                            std::to_string(tol));
  }
  const std::size_t n = input.rows();

  // Work on the exactly-Hermitian part (A + A*)/2.
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (input(i, j) + std::conj(input(j, i)));
  }
  ComplexMatrix vecs = ComplexMatrix::identity(n);
  const double scale = hs_norm(a);

  bool converged = scale == 0.0;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    if (off_diagonal_norm(a) <= kConvergedRelative * scale) {
      converged = true;
      break;
    }
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) <= kSkipRelative * scale) continue;
        rotate(a, vecs, p, q);
        rotated = true;
      }
    }
    if (!rotated) converged = true;
  }
  if (!converged && off_diagonal_norm(a) > tol * scale) {
    throw ConvergenceError("hermitian_eig: no convergence after " + std::to_string(max_sweeps) +
                           " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });

  SpectralDecomp out;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = vecs(i, order[k]);
  }
  return out;
}

}  // namespace qsim
