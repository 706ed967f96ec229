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

#include "qsim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qsim/errors.hpp"

namespace qsim {

namespace {

std::string shape(const ComplexMatrix &m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_square(const ComplexMatrix &a, const char *op) {
  if (!a.is_square()) {
    throw DimensionError(std::string(op) + ": expected a square matrix, got " + shape(a));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// ComplexVector

ComplexVector::ComplexVector(std::size_t dim) : entries_(dim, Cplx{0.0, 0.0}) {}

ComplexVector::ComplexVector(std::vector<Cplx> entries) : entries_(std::move(entries)) {}

ComplexVector::ComplexVector(std::initializer_list<Cplx> entries) : entries_(entries) {}

ComplexVector ComplexVector::unit(std::size_t dim, std::size_t index) {
  if (index >= dim) throw RangeError("ComplexVector::unit: index out of range");
  ComplexVector v(dim);
  v[index] = 1.0;
  return v;
}

double ComplexVector::norm() const {
  double s = 0.0;
  for (const auto &x : entries_) s += std::norm(x);
  return std::sqrt(s);
}

ComplexVector &ComplexVector::operator*=(Cplx s) {
  for (auto &x : entries_) x *= s;
  return *this;
}

ComplexVector &ComplexVector::operator+=(const ComplexVector &o) {
  if (o.dim() != dim()) throw DimensionError("vector +: dimension mismatch");
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] += o[i];
  return *this;
}

ComplexVector &ComplexVector::operator-=(const ComplexVector &o) {
  if (o.dim() != dim()) throw DimensionError("vector -: dimension mismatch");
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] -= o[i];
  return *this;
}

ComplexVector operator*(Cplx s, ComplexVector v) { return v *= s; }
ComplexVector operator+(ComplexVector a, const ComplexVector &b) { return a += b; }
ComplexVector operator-(ComplexVector a, const ComplexVector &b) { return a -= b; }

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Cplx{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("ComplexMatrix: " + std::to_string(entries_.size()) +
                         " entries for a " + std::to_string(rows) + "x" +
                         std::to_string(cols) + " matrix");
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Cplx>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto &r : rows) {
    if (r.size() != cols_) throw DimensionError("ComplexMatrix: ragged initializer");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Cplx> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n) throw RangeError("ComplexMatrix::unit: index out of range");
  ComplexMatrix m(n, n);
  m(i, j) = 1.0;
  return m;
}

ComplexVector ComplexMatrix::column(std::size_t j) const {
  if (j >= cols_) throw RangeError("ComplexMatrix::column: index out of range");
  ComplexVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void ComplexMatrix::set_column(std::size_t j, const ComplexVector &v) {
  if (j >= cols_) throw RangeError("ComplexMatrix::set_column: index out of range");
  if (v.dim() != rows_) throw DimensionError("ComplexMatrix::set_column: length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

ComplexMatrix ComplexMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                                   std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) {
    throw RangeError("ComplexMatrix::block: block exceeds " + shape(*this));
  }
  ComplexMatrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  }
  return b;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) {
    throw DimensionError("matrix +: " + shape(*this) + " vs " + shape(o));
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) {
    throw DimensionError("matrix -: " + shape(*this) + " vs " + shape(o));
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Cplx s) {
  for (auto &x : entries_) x *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }
ComplexMatrix operator*(Cplx s, ComplexMatrix a) { return a *= s; }
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) { return matmul(a, b); }
ComplexVector operator*(const ComplexMatrix &a, const ComplexVector &v) { return apply(a, v); }

// ---------------------------------------------------------------------------
// Free functions

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: " + shape(a) + " * " + shape(b));
  }
  ComplexMatrix c(a.rows(), b.cols());
  // i-k-j order keeps the inner loop contiguous in both b and c.
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Cplx aik = a(i, k);
      if (aik == Cplx{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

ComplexVector apply(const ComplexMatrix &a, const ComplexVector &v) {
  if (a.cols() != v.dim()) {
    throw DimensionError("apply: " + shape(a) + " * vector of dim " + std::to_string(v.dim()));
  }
  ComplexVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Cplx s{};
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix &a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Cplx aij = a(i, j);
      if (aij == Cplx{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

ComplexMatrix kron_all(std::span<const ComplexMatrix> factors) {
  if (factors.empty()) throw DimensionError("kron_all: empty factor list");
  ComplexMatrix acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = kron(acc, factors[i]);
  return acc;
}

ComplexVector kron(const ComplexVector &a, const ComplexVector &b) {
  ComplexVector out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t k = 0; k < b.dim(); ++k) out[i * b.dim() + k] = a[i] * b[k];
  }
  return out;
}

Cplx trace(const ComplexMatrix &a) {
  require_square(a, "trace");
  Cplx s{};
  for (std::size_t i = 0; i < a.rows(); ++i) s += a(i, i);
  return s;
}

Cplx hs_inner(const ComplexMatrix &a, const ComplexMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || !a.is_square()) {
    throw DimensionError("hs_inner: " + shape(a) + " vs " + shape(b));
  }
  // tr(A* B) = sum_ij conj(A_ij) B_ij
  Cplx s{};
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) s += std::conj(ea[i]) * eb[i];
  return s;
}

double hs_norm(const ComplexMatrix &a) {
  double s = 0.0;
  for (const auto &x : a.entries()) s += std::norm(x);
  return std::sqrt(s);
}

Cplx inner(const ComplexVector &phi, const ComplexVector &psi) {
  if (phi.dim() != psi.dim()) throw DimensionError("inner: dimension mismatch");
  Cplx s{};
  for (std::size_t i = 0; i < phi.dim(); ++i) s += std::conj(phi[i]) * psi[i];
  return s;
}

ComplexMatrix outer(const ComplexVector &psi, const ComplexVector &phi) {
  if (psi.dim() != phi.dim()) throw DimensionError("outer: dimension mismatch");
  ComplexMatrix m(psi.dim(), phi.dim());
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    for (std::size_t j = 0; j < phi.dim(); ++j) m(i, j) = psi[i] * std::conj(phi[j]);
  }
  return m;
}

ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b) {
  return matmul(a, b) - matmul(b, a);
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("max_abs_diff: " + shape(a) + " vs " + shape(b));
  }
  double m = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return m;
}

double max_abs_diff(const ComplexVector &a, const ComplexVector &b) {
  if (a.dim() != b.dim()) throw DimensionError("max_abs_diff: dimension mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

bool is_unitary(const ComplexMatrix &u, double tol) {
  if (!u.is_square() || u.empty()) return false;
  const std::size_t n = u.rows();
  // ||U*U - I||_F without materialising U*.
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Cplx g{};
      for (std::size_t k = 0; k < n; ++k) g += std::conj(u(k, i)) * u(k, j);
      if (i == j) g -= 1.0;
      s += std::norm(g);
    }
  }
  return std::sqrt(s) <= tol;
}

bool is_hermitian(const ComplexMatrix &a, double tol) {
  if (!a.is_square() || a.empty()) return false;
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) s += std::norm(a(i, j) - std::conj(a(j, i)));
  }
  return std::sqrt(s) <= tol;
}

ComplexMatrix unitary_from_hamiltonian(const ComplexMatrix &h, double t, double tol) {
  const SpectralDecomp sd = hermitian_eig(h, tol);
  const std::size_t n = h.rows();
  const ComplexMatrix &u = sd.vectors;
  std::vector<Cplx> phases(n);
  for (std::size_t k = 0; k < n; ++k) phases[k] = std::polar(1.0, -t * sd.values[k]);
  // U diag(phases) U*
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Cplx s{};
      for (std::size_t k = 0; k < n; ++k) s += u(i, k) * phases[k] * std::conj(u(j, k));
      out(i, j) = s;
    }
  }
  return out;
}

}  // namespace qsim
