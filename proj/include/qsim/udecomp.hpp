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
 * @file udecomp.hpp
 * Factorization of U(N) into N(N-1)/2 two-level unitaries.
 *
 * Column 0 of U is rotated onto e_1 by N-1 two-level gates; unitarity then
 * forces W = F U into the block form diag(1, U'), and the recursion continues
 * on U' with its factors shifted down one index. Indices are 1-based
 * throughout this module, matching K_ij.
 */

#include <cstddef>
#include <vector>

#include "qsim/gates.hpp"
#include "qsim/linalg.hpp"

namespace qsim {

/// Relative threshold below which a component counts as zero.
inline constexpr double kReduceZeroTol = 1e-13;
/// Allowed |W_11 - 1| after reducing the first column of a unitary.
inline constexpr double kReducedPivotTol = 1e-9;

struct TwoLevelFactor {
  std::size_t i = 1;
  std::size_t j = 2;
  ComplexMatrix v;
  std::size_t dim = 2;

  /// K_ij^{(dim)}(v).
  ComplexMatrix realize() const;
  /// As a TWO-LEVEL gate; v must be unitary within tol.
  GateSpec gate(double tol = tol::kUnitary) const;
  bool is_identity(double tol = tol::kEntrywise) const;
};

/// Factors in application order: reconstruct() = f_m ... f_1 with f_1 = factors[0].
struct Decomposition {
  std::size_t dim = 0;
  std::vector<TwoLevelFactor> factors;
};

/// K_ij^{(N)}(v): identity except the 2x2 block on rows/cols {i, j}.
ComplexMatrix k_embed(std::size_t dim, std::size_t i, std::size_t j, const ComplexMatrix &v);
/// [[u, 0], [0, 1]].
ComplexMatrix up_embed(const ComplexMatrix &u, double tol = tol::kUnitary);
/// [[1, 0], [0, u]].
ComplexMatrix down_embed(const ComplexMatrix &u, double tol = tol::kUnitary);

struct VectorReduction {
  std::vector<TwoLevelFactor> factors;  ///< exactly N-1, application order
  double norm = 0.0;
};

/// Factors f_1..f_{N-1} with f_{N-1} ... f_1 psi = (||psi||, 0, ..., 0).
/// Throws RangeError for N < 2 and Error for the zero vector.
VectorReduction reduce_vector(const ComplexVector &psi);

/// f_m ... f_1 x for factors in application order.
ComplexVector apply_factors(const std::vector<TwoLevelFactor> &factors, ComplexVector x);

/// Throws NotUnitaryError unless is_unitary(u, tol); N >= 2.
Decomposition decompose_unitary(const ComplexMatrix &u, double tol = tol::kUnitary);

ComplexMatrix reconstruct(const Decomposition &d);

/// The factors as a DIM circuit of TWO-LEVEL gates. The last factor carries
/// whatever unitarity defect the input had, hence the tolerance.
Circuit to_circuit(const Decomposition &d, double tol = tol::kUnitary);
Decomposition from_circuit(const Circuit &c);

}  // namespace qsim
