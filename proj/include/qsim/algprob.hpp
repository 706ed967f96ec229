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

#pragma once

/**
 * @file algprob.hpp
 * States, random variables and laws on the algebraic probability space
 * (M_N(C), rho).
 *
 * A state is a density matrix (Hermitian, positive semidefinite, trace one).
 * A random variable is a Hermitian matrix; the event {A = x} is the
 * orthogonal projector onto the x-eigenspace, and the law of A under rho
 * assigns tr(rho P_{A=x}) to every eigenvalue x.
 */

#include <cstddef>
#include <vector>

#include "qsim/linalg.hpp"

namespace qsim {

/// Probabilities within [-kProbabilityClamp, 0) are rounding noise and read as 0.
inline constexpr double kProbabilityClamp = 1e-12;
/// Allowed drift of sum_x P(A = x) from 1.
inline constexpr double kLawSumTolerance = 1e-9;

/// A density matrix. Construction only checks squareness; use validate_state
/// (or make_state) to enforce the three state conditions.
class DensityMatrix {
 public:
  DensityMatrix() = default;
  explicit DensityMatrix(ComplexMatrix mat);

  const ComplexMatrix &matrix() const noexcept { return mat_; }
  std::size_t dim() const noexcept { return mat_.rows(); }

 private:
  ComplexMatrix mat_;
};

/// |psi><psi| for a unit vector; throws StateError(kNotNormalized) otherwise.
DensityMatrix pure_state(const ComplexVector &psi, double tol = tol::kHermitian);

/**
 * Checks that rho is Hermitian, has no eigenvalue below -tol, and has trace
 * within tol of 1. Returns the rank (number of eigenvalues > tol), i.e. the
 * stratum S_r the state lives in. Each violated condition raises a StateError
 * with its own Kind.
 */
std::size_t validate_state(const DensityMatrix &rho, double tol = tol::kHermitian);

/// Construct and validate in one step.
DensityMatrix make_state(ComplexMatrix mat, double tol = tol::kHermitian);

/// One eigenspace of an observable.
struct EventProjector {
  double value = 0.0;
  ComplexMatrix proj;
};

/// A Hermitian random variable with its spectral data computed at construction.
class Observable {
 public:
  Observable() = default;
  /// Throws NotHermitianError if `mat` is not Hermitian within `tol`.
  explicit Observable(ComplexMatrix mat, double tol = tol::kHermitian,
                      double cluster_tol = tol::kEigCluster);

  const ComplexMatrix &matrix() const noexcept { return mat_; }
  const SpectralDecomp &spectral() const noexcept { return spectral_; }
  /// Projectors of the clustered eigenvalues, ascending, mutually orthogonal.
  const std::vector<EventProjector> &eigenspaces() const noexcept { return eigenspaces_; }
  std::size_t dim() const noexcept { return mat_.rows(); }

 private:
  ComplexMatrix mat_;
  SpectralDecomp spectral_;
  std::vector<EventProjector> eigenspaces_;
};

/// P_{A = x}: the eigenspace projector if x is within tol of a clustered
/// eigenvalue, the zero matrix O_N otherwise.
EventProjector event_projector(const Observable &a, double x, double tol = tol::kEigCluster);

struct LawOutcome {
  double value = 0.0;
  double probability = 0.0;
};

/// Finite-support law: values strictly increasing, probabilities summing to 1.
struct Law {
  std::vector<LawOutcome> outcomes;

  std::size_t size() const noexcept { return outcomes.size(); }
  double total() const;
};

/// P_rho(A = x) = Re (rho, P_{A=x})_HS for every clustered eigenvalue of A.
/// Validates rho first; throws StateError on an invalid state or on a
/// probability below -kProbabilityClamp.
Law law(const Observable &a, const DensityMatrix &rho, double tol = tol::kHermitian);

/// V M V*; throws NotUnitaryError unless V is unitary within tol.
ComplexMatrix conjugate(const ComplexMatrix &m, const ComplexMatrix &v,
                        double tol = tol::kUnitary);

/// Sorted-order pairing of two laws.
struct LawComparison {
  bool same_support_size = false;
  double max_value_diff = 0.0;
  double max_probability_diff = 0.0;
};

LawComparison compare_laws(const Law &a, const Law &b);

}  // namespace qsim
