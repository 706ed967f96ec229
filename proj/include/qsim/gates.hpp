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
 * @file gates.hpp
 * Elementary gates and circuits.
 *
 * An elementary gate is a 2x2 unitary v together with an embedding into
 * U(N). Every embedding used here acts on disjoint pairs (a, b) of flat
 * indices as
 *
 *   x[a] <- v00 x[a] + v01 x[b],   x[b] <- v10 x[a] + v11 x[b],
 *
 * leaving all other indices alone, so gates are applied structurally in
 * O(N) per vector instead of by dense products.
 *
 * The free functions wire_gate / control_projector / controlled_gate /
 * suffix_controlled_gate build the same matrices from Kronecker products of
 * projectors. They are slower and exist as the reference construction.
 */

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qsim/algprob.hpp"
#include "qsim/linalg.hpp"
#include "qsim/qpu.hpp"

namespace qsim {

/// R(alpha) = [[cos a, -sin a], [sin a, cos a]].
ComplexMatrix rotation(double alpha);

enum class GateKind {
  kWire,              ///< v on one wire
  kControlled,        ///< v on a target wire, controlled by all other wires
  kSuffixControlled,  ///< v on wire n-l+1, controlled by wires n-l+2..n
  kTwoLevel,          ///< v on basis indices (i, j) of C^N
};

const char *to_string(GateKind kind);

/// Every factory validates that v is a 2x2 unitary within `tol`.
class GateSpec {
 public:
  /// w_j^{(n)}(v); 1 <= j <= n.
  static GateSpec wire(std::size_t n, std::size_t j, ComplexMatrix v,
                       double tol = tol::kUnitary);
  /// CC_z^{(target)}(v); z lists the n-1 other wires in ascending order.
  static GateSpec controlled(std::size_t n, std::size_t target, BitString z, ComplexMatrix v,
                             double tol = tol::kUnitary);
  /// I_{2^{n-l}} (x) CC_suffix^{(1)}(v): target wire n-l+1, controls on
  /// wires n-l+2..n matching suffix (length l-1). l = 1 is a plain wire gate
  /// on wire n.
  static GateSpec suffix_controlled(std::size_t n, std::size_t ell, BitString suffix,
                                    ComplexMatrix v, double tol = tol::kUnitary);
  /// K_ij^{(N)}(v); 1 <= i < j <= N.
  static GateSpec two_level(std::size_t dim, std::size_t i, std::size_t j, ComplexMatrix v,
                            double tol = tol::kUnitary);

  /// Records that v = R(alpha); serialization then prints the angle.
  GateSpec &with_angle(double alpha);

  GateKind kind() const noexcept { return kind_; }
  /// Register size; 0 for two-level gates, which carry only dim().
  std::size_t num_qubits() const noexcept { return n_; }
  std::size_t dim() const noexcept { return dim_; }
  const ComplexMatrix &v() const noexcept { return v_; }
  const std::optional<double> &angle() const noexcept { return angle_; }

  /// Target wire (wire gates, controlled kinds).
  std::size_t target() const noexcept { return a_; }
  /// Level l of a suffix-controlled gate.
  std::size_t level() const noexcept { return b_; }
  /// Control pattern (controlled: n-1 bits; suffix-controlled: l-1 bits).
  const BitString &pattern() const noexcept { return pattern_; }
  /// 1-based indices of a two-level gate.
  std::size_t index_i() const noexcept { return a_; }
  std::size_t index_j() const noexcept { return b_; }

  /// Flat index pairs the 2x2 block acts on.
  const std::vector<std::pair<std::size_t, std::size_t>> &pairs() const noexcept {
    return pairs_;
  }

  /// True if v is within tol of I_2 entrywise, so the gate realizes I_N.
  bool is_identity(double tol = tol::kEntrywise) const;

  /// The dense N x N unitary.
  ComplexMatrix realize() const;
  /// m <- G m.
  void apply_left(ComplexMatrix &m) const;
  /// m <- m G*.
  void apply_right_adjoint(ComplexMatrix &m) const;
  ComplexVector apply(const ComplexVector &psi) const;
  /// G rho G*.
  DensityMatrix apply(const DensityMatrix &rho) const;

  /// Same kind, indices and pattern; v compared exactly.
  bool operator==(const GateSpec &o) const;

 private:
  GateSpec() = default;
  void build_pairs();

  GateKind kind_ = GateKind::kWire;
  std::size_t n_ = 0;
  std::size_t dim_ = 0;
  std::size_t a_ = 0;
  std::size_t b_ = 0;
  BitString pattern_;
  ComplexMatrix v_;
  std::optional<double> angle_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

/**
 * An ordered gate list; gates()[0] acts first, so the realized unitary is
 * U = G_m ... G_2 G_1.
 *
 * With `strict` set, add() rejects a gate whose product with its predecessor
 * is within 1e-10 of the identity (the reducedness condition).
 */
class Circuit {
 public:
  static Circuit on_qubits(std::size_t n, bool strict = false);
  static Circuit on_dim(std::size_t dim, bool strict = false);

  /// 0 for a circuit declared by dimension only.
  std::size_t num_qubits() const noexcept { return n_; }
  std::size_t dim() const noexcept { return dim_; }
  bool strict() const noexcept { return strict_; }
  const std::vector<GateSpec> &gates() const noexcept { return gates_; }
  std::size_t gate_count() const noexcept { return gates_.size(); }

  /// Throws DimensionError on a dimension mismatch and Error on a
  /// reducedness violation in strict mode.
  Circuit &add(GateSpec g);

  ComplexMatrix realize() const;
  ComplexVector apply(const ComplexVector &psi) const;
  /// Gate-by-gate conjugation of rho; never forms the full product.
  DensityMatrix apply(const DensityMatrix &rho) const;
  /// Number of gates that are not the identity.
  std::size_t length(double tol = tol::kEntrywise) const;

 private:
  Circuit(std::size_t n, std::size_t dim, bool strict) : n_(n), dim_(dim), strict_(strict) {}

  std::size_t n_ = 0;
  std::size_t dim_ = 0;
  bool strict_ = false;
  std::vector<GateSpec> gates_;
};

ComplexMatrix realize(const Circuit &c);
DensityMatrix apply(const Circuit &c, const DensityMatrix &rho);
std::size_t circuit_length(const Circuit &c);

// Reference Kronecker constructions.

/// I_2^{(x)(j-1)} (x) v (x) I_2^{(x)(n-j)}.
ComplexMatrix wire_gate(std::size_t n, std::size_t j, const ComplexMatrix &v);
/// C_z^{(l)}(v) = |z_1..z_{l-1}><..| (x) v (x) |z_{l+1}..z_n><..|; not unitary.
ComplexMatrix control_projector(std::size_t n, std::size_t ell, const BitString &z,
                                const ComplexMatrix &v);
/// CC_z^{(l)}(v) = C_z(v) + sum_{z' != z} C_{z'}(I_2).
ComplexMatrix controlled_gate(std::size_t n, std::size_t ell, const BitString &z,
                              const ComplexMatrix &v);
/// I_{2^{n-l}} (x) CC_suffix^{(1)}(v) with CC acting on l qubits.
ComplexMatrix suffix_controlled_gate(std::size_t n, std::size_t ell, const BitString &suffix,
                                     const ComplexMatrix &v);

}  // namespace qsim
