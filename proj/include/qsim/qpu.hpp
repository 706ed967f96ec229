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
 * @file qpu.hpp
 * The n-qubit processor: outcome labels, computational-basis observables,
 * unitary evolution of states and shot sampling.
 *
 * Two index maps are in play and they are deliberately different:
 *
 *  - outcome label k  <->  bits z_1 z_2 ... z_n with k = sum_j z_j 2^{j-1}
 *    (little-endian; z_1 is the low bit), see encode()/decode();
 *  - array position of |z_1> (x) |z_2> (x) ... (x) |z_n> in a 2^n vector is
 *    sum_j z_j 2^{n-j} (the leftmost tensor factor is most significant),
 *    see flat_index().
 *
 * Wire j of a register is tensor slot j, counted from 1 at the left.
 */

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qsim/algprob.hpp"
#include "qsim/linalg.hpp"

namespace qsim {

/// n bits z_1 ... z_n; bits[0] is z_1.
struct BitString {
  std::vector<std::uint8_t> bits;

  std::size_t size() const noexcept { return bits.size(); }
  std::uint8_t operator[](std::size_t i) const { return bits[i]; }

  /// "z1z2...zn"; the empty string prints as "-".
  std::string to_string() const;
  /// Inverse of to_string(); throws ParseError on anything but 0/1 (or "-").
  static BitString from_string(std::string_view s);

  bool operator==(const BitString &) const = default;
};

/// b_n(k); throws RangeError unless 0 <= k < 2^n and 1 <= n <= 62.
BitString encode(std::uint64_t k, std::size_t n);
std::uint64_t decode(const BitString &bits);

/// Array position of |b_n(k)> in the Kronecker-flattened register.
std::size_t flat_index(std::uint64_t k, std::size_t n);
/// Inverse of flat_index.
std::uint64_t label_of_flat_index(std::size_t flat, std::size_t n);

/// |b_n(k)> = |z_1> (x) ... (x) |z_n>.
ComplexVector basis_vector(std::uint64_t k, std::size_t n);

/// |<b_n(k)|psi>|^2 for every label k; dim(psi) must be 2^n.
std::vector<double> basis_probabilities(const ComplexVector &psi);

/**
 * A_1 (x) ... (x) A_n built from single-qubit observables.
 *
 * For each factor the computational state |z> is paired with an eigenvector
 * u_z and eigenvalue lambda_z. A diagonal factor keeps u_z = |z> and reads
 * lambda_z off its diagonal as given (no reordering); any other factor uses
 * its ascending spectral decomposition, so lambda_0 <= lambda_1.
 */
class QpuObservable {
 public:
  explicit QpuObservable(std::vector<Observable> factors);

  std::size_t num_qubits() const noexcept { return factors_.size(); }
  std::size_t dim() const noexcept { return std::size_t{1} << factors_.size(); }
  const std::vector<Observable> &factors() const noexcept { return factors_; }
  const Observable &realized() const noexcept { return realized_; }
  /// lambda_{b_n(k)} = prod_j lambda^{(j)}_{z_j}, indexed by label k.
  const std::vector<double> &eigen_labels() const noexcept { return labels_; }
  /// W = U_1 (x) ... (x) U_n; column flat_index(k) is the eigenvector for label k.
  const ComplexMatrix &eigenbasis() const noexcept { return basis_; }
  bool computational() const noexcept { return computational_; }

  /// P(A = k) = <w_k| rho |w_k> for every label k, regardless of eigenvalue
  /// collisions between labels.
  std::vector<double> basis_probabilities(const DensityMatrix &rho) const;
  /// The same distribution as a Law whose values are the labels 0..2^n-1.
  Law basis_law(const DensityMatrix &rho) const;
  /// Law of the realized observable (outcomes merged by clustered eigenvalue).
  Law law(const DensityMatrix &rho, double tol = tol::kHermitian) const;

 private:
  std::vector<Observable> factors_;
  Observable realized_;
  std::vector<double> labels_;
  ComplexMatrix basis_;
  bool computational_ = true;
};

QpuObservable qpu_observable(std::vector<Observable> factors);
/// Every factor is Z = diag(1, -1).
QpuObservable computational_observable(std::size_t n);

/// A universal digital quantum computer: observable plus rho_0 = |b_n(0)><b_n(0)|.
struct Udqc {
  QpuObservable observable;
  DensityMatrix rho0;

  std::size_t num_qubits() const noexcept { return observable.num_qubits(); }
};

Udqc make_udqc(std::size_t n);
Udqc make_udqc(QpuObservable observable);

/// U rho U*; throws NotUnitaryError / DimensionError.
DensityMatrix evolve(const ComplexMatrix &u, const DensityMatrix &rho,
                     double tol = tol::kUnitary);

/// rho(t) = e^{-itH} rho0 e^{itH}, the solution of d rho/dt = -i[H, rho].
DensityMatrix liouville_solve(const ComplexMatrix &h, const DensityMatrix &rho0, double t,
                              double tol = tol::kHermitian);

struct ShotResult {
  /// Outcome index -> count; only observed outcomes appear.
  std::map<std::uint64_t, std::uint64_t> counts;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;

  std::uint64_t count(std::uint64_t k) const;
  /// Counts as a dense array of length `size`.
  std::vector<std::uint64_t> dense(std::size_t size) const;
};

/**
 * Draws `shots` i.i.d. outcomes by inverse CDF over the cumulative
 * probabilities, using one SplitMix64 stream seeded with `seed`. Outcome
 * indices are positions in `probabilities`. Throws RangeError on shots == 0
 * and Error on an empty or negative distribution.
 */
ShotResult sample(std::span<const double> probabilities, std::uint64_t shots,
                  std::uint64_t seed);
/// Same, keyed by position in law.outcomes.
ShotResult sample(const Law &law, std::uint64_t shots, std::uint64_t seed);

}  // namespace qsim
