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
 * @file grover_rudolph.hpp
 * Loading a density on [0, 1] into an n-qubit register.
 *
 * The register is measured in the computational basis and outcome k
 * (k = sum_j z_j 2^{j-1}) should occur with probability equal to the mass of
 * the dyadic interval [k/2^n, (k+1)/2^n]. The construction bisects [0, 1]
 * from the top: z_n decides the half, z_{n-1} the quarter within it, and so
 * on. Each bisection of an interval I into I0 (left) and I1 (right) becomes
 * one rotation by
 *
 *   theta_I = arccos sqrt(mass(I0) / mass(I)),
 *
 * so cos^2 goes to the left child and sin^2 to the right.
 *
 * Angles are stored per tree node (L, s): level L = 0..n-1 and index
 * s in [0, 2^L), the interval [s/2^L, (s+1)/2^L]. The node (0, 0) is the root
 * angle theta. A node at level L >= 1 is addressed in the circuit by the
 * control suffix z_{n-L+1} ... z_n, with s = sum_p suffix[p] 2^p.
 */

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <string_view>
#include <vector>

#include "qsim/density.hpp"
#include "qsim/gates.hpp"
#include "qsim/qpu.hpp"

namespace qsim {

/// T_z(x): cos x for z = 0, sin x for z = 1.
double trig_factor(int z, double x);

/// The mass of d over [a, b]; throws DensityError(kDomain) unless
/// 0 <= a <= b <= 1.
double integrate(const Density &d, double a, double b);

/// The mass of [idx / 2^level, (idx + 1) / 2^level].
double dyadic_mass(const Density &d, std::size_t level, std::uint64_t idx);

struct AngleTreeOptions {
  /// Parent masses at or below this count as zero.
  double zero_mass_tol = 1e-14;
  /// Angle stored for a zero-mass parent. Any value gives the same law since
  /// the parent amplitude is already zero; pi/2 makes the gate a non-identity
  /// rotation so identity pruning keeps it.
  double zero_mass_angle = std::numbers::pi / 2;
};

class AngleTree {
 public:
  AngleTree() = default;
  /// nodes[L] must have 2^L entries for L = 0..n-1.
  explicit AngleTree(std::vector<std::vector<double>> nodes);

  std::size_t num_qubits() const noexcept { return nodes_.size(); }
  double theta() const { return nodes_.at(0).at(0); }
  double node(std::size_t level, std::uint64_t index) const;
  /// theta_{z_{n-L+1} ... z_n} for a suffix of length L >= 1; the empty
  /// suffix returns theta.
  double angle(const BitString &suffix) const;
  /// Parses the suffix; "" or "-" is the root.
  double angle(std::string_view suffix) const;
  const std::vector<std::vector<double>> &nodes() const noexcept { return nodes_; }
  /// 2^n - 1.
  std::size_t size() const noexcept;

  /// P(k) = prod_j T^2_{z_j}(theta_{z_{j+1} ... z_n}) evaluated from the
  /// angles alone.
  std::vector<double> formula_probabilities() const;

 private:
  std::vector<std::vector<double>> nodes_;
};

/// Throws RangeError unless 1 <= n <= 20.
AngleTree angle_tree(const Density &d, std::size_t n, const AngleTreeOptions &opts = {});

/**
 * Stage 1 is the rotation R(theta) on wire n. Stage l = 2..n applies, for
 * s = 0..2^{l-1}-1 in order, R(theta_suffix) on wire n-l+1 controlled by
 * wires n-l+2..n matching the suffix of s. With `prune`, gates whose
 * rotation is the identity are dropped.
 */
Circuit synthesize(const AngleTree &tree, bool prune = false);

/// P(A = k) for every label k, from exact integration.
std::vector<double> target_law(const Density &d, std::size_t n);

/// Per-label probabilities of c applied to rho_0 = |b_n(0)><b_n(0)|,
/// computed on the density matrix gate by gate.
std::vector<double> circuit_probabilities(const Circuit &c);

/// c |b_n(0)> as a state vector.
ComplexVector prepared_state(const Circuit &c);

struct VerifyRow {
  std::uint64_t k = 0;
  BitString bits;
  double exact = 0.0;
  double formula = 0.0;
  double circuit = 0.0;
};

struct VerifyReport {
  std::size_t n = 0;
  double tol = 0.0;
  bool exact_density = true;
  std::vector<VerifyRow> rows;
  double max_circuit_vs_exact = 0.0;
  double max_formula_vs_exact = 0.0;
  double max_circuit_vs_formula = 0.0;
  /// Sum of the formula probabilities; 1 up to rounding.
  double formula_total = 0.0;

  bool passed() const noexcept;
};

/// Synthesizes the circuit for (d, n) and compares its law, the angle
/// formula and the exact target pairwise.
VerifyReport verify(const Density &d, std::size_t n, double tol,
                    const AngleTreeOptions &opts = {});

}  // namespace qsim
