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
 * @file linalg.hpp
 * Dense complex linear algebra over M_N(C).
 *
 * Everything is stored row-major in contiguous std::vector storage. Values
 * are immutable once built unless a mutating accessor is used explicitly, and
 * every free function is pure.
 */

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qsim {

using Cplx = std::complex<double>;

/// Default tolerances; every routine that compares takes an explicit override.
namespace tol {
inline constexpr double kUnitary = 1e-10;
inline constexpr double kHermitian = 1e-10;
inline constexpr double kEigCluster = 1e-9;
inline constexpr double kEntrywise = 1e-12;
}  // namespace tol

class ComplexVector {
 public:
  ComplexVector() = default;
  explicit ComplexVector(std::size_t dim);
  explicit ComplexVector(std::vector<Cplx> entries);
  ComplexVector(std::initializer_list<Cplx> entries);

  /// The standard basis vector e_index (0-based) of dimension dim.
  static ComplexVector unit(std::size_t dim, std::size_t index);

  std::size_t dim() const noexcept { return entries_.size(); }
  Cplx &operator[](std::size_t i) { return entries_[i]; }
  const Cplx &operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Cplx> entries() const noexcept { return entries_; }
  std::span<Cplx> entries() noexcept { return entries_; }

  double norm() const;

  ComplexVector &operator*=(Cplx s);
  ComplexVector &operator+=(const ComplexVector &o);
  ComplexVector &operator-=(const ComplexVector &o);

 private:
  std::vector<Cplx> entries_;
};

ComplexVector operator*(Cplx s, ComplexVector v);
ComplexVector operator+(ComplexVector a, const ComplexVector &b);
ComplexVector operator-(ComplexVector a, const ComplexVector &b);

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  /// Zero matrix.
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Cplx> entries);
  /// Row-wise literal, e.g. {{0, 1}, {1, 0}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Cplx>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> diag);
  static ComplexMatrix diagonal(std::span<const Cplx> diag);
  /// Matrix unit E_ij (0-based).
  static ComplexMatrix unit(std::size_t n, std::size_t i, std::size_t j);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return entries_.empty(); }

  Cplx &operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Cplx &operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::span<const Cplx> entries() const noexcept { return entries_; }
  std::span<Cplx> entries() noexcept { return entries_; }

  ComplexVector column(std::size_t j) const;
  void set_column(std::size_t j, const ComplexVector &v);
  /// Copy of the block [r0, r0+nr) x [c0, c0+nc).
  ComplexMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  ComplexMatrix &operator+=(const ComplexMatrix &o);
  ComplexMatrix &operator-=(const ComplexMatrix &o);
  ComplexMatrix &operator*=(Cplx s);

  bool operator==(const ComplexMatrix &o) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Cplx> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(Cplx s, ComplexMatrix a);
/// Same as matmul.
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
/// Same as apply.
ComplexVector operator*(const ComplexMatrix &a, const ComplexVector &v);

/// Eigen-decomposition A = U diag(values) U* of a Hermitian matrix.
/// Values are ascending; column i of `vectors` pairs with values[i].
struct SpectralDecomp {
  std::vector<double> values;
  ComplexMatrix vectors;
};

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexVector apply(const ComplexMatrix &a, const ComplexVector &v);
ComplexMatrix adjoint(const ComplexMatrix &a);
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
/// Left-to-right Kronecker product of a non-empty list.
ComplexMatrix kron_all(std::span<const ComplexMatrix> factors);
ComplexVector kron(const ComplexVector &a, const ComplexVector &b);
Cplx trace(const ComplexMatrix &a);
/// (A, B)_HS = tr(A* B).
Cplx hs_inner(const ComplexMatrix &a, const ComplexMatrix &b);
double hs_norm(const ComplexMatrix &a);
/// <phi|psi>, conjugate-linear in the first argument.
Cplx inner(const ComplexVector &phi, const ComplexVector &psi);
/// |psi><phi|.
ComplexMatrix outer(const ComplexVector &psi, const ComplexVector &phi);
/// [A, B] = AB - BA.
ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b);
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);
double max_abs_diff(const ComplexVector &a, const ComplexVector &b);

bool is_unitary(const ComplexMatrix &u, double tol = tol::kUnitary);
bool is_hermitian(const ComplexMatrix &a, double tol = tol::kHermitian);

/**
 * Cyclic Jacobi eigensolver for Hermitian matrices.
 *
 * Sweeps over all (p, q) pairs, annihilating each off-diagonal entry with a
 * complex plane rotation, until the off-diagonal Frobenius mass falls below
 * machine-level noise relative to ||A||_HS. Throws NotHermitianError if
 * `is_hermitian(a, tol)` fails and ConvergenceError if the residual is still
 * above tol * ||A||_HS after `max_sweeps` sweeps.
 */
SpectralDecomp hermitian_eig(const ComplexMatrix &a, double tol = tol::kHermitian,
                             int max_sweeps = 100);

/// e^{-itH} = U diag(e^{-it lambda}) U*, built from hermitian_eig.
ComplexMatrix unitary_from_hamiltonian(const ComplexMatrix &h, double t,
                                       double tol = tol::kHermitian);

}  // namespace qsim
