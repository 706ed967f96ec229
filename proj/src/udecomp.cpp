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

#include "qsim/udecomp.hpp"

#include <cmath>
#include <string>

#include "qsim/errors.hpp"

namespace qsim {

namespace {

const ComplexMatrix kPauliX{{0.0, 1.0}, {1.0, 0.0}};

TwoLevelFactor make_factor(std::size_t dim, std::size_t i, std::size_t j, ComplexMatrix v) {
  return TwoLevelFactor{i, j, std::move(v), dim};
}

// Rows i-1, j-1 of m <- v applied on the left. No validation; the reduction
// factors are unitary by construction.
void apply_factor(const TwoLevelFactor &f, ComplexMatrix &m) {
  const std::size_t a = f.i - 1;
  const std::size_t b = f.j - 1;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const Cplx xa = m(a, c);
    const Cplx xb = m(b, c);
    m(a, c) = f.v(0, 0) * xa + f.v(0, 1) * xb;
    m(b, c) = f.v(1, 0) * xa + f.v(1, 1) * xb;
  }
}

void apply_factor(const TwoLevelFactor &f, ComplexVector &x) {
  const std::size_t a = f.i - 1;
  const std::size_t b = f.j - 1;
  const Cplx xa = x[a];
  const Cplx xb = x[b];
  x[a] = f.v(0, 0) * xa + f.v(0, 1) * xb;
  x[b] = f.v(1, 0) * xa + f.v(1, 1) * xb;
}

// Reduces psi[0..m) to (r, 0, ..., 0) with m-1 factors appended to `out`.
// `thr` is the absolute zero threshold for this vector.
void reduce_prefix(const ComplexVector &psi, std::size_t m, double thr,
                   std::vector<TwoLevelFactor> &out) {
  const std::size_t dim = psi.dim();
  const Cplx b = psi[m - 1];
  const double bn = std::abs(b);

  if (m == 2) {
    const Cplx a = psi[0];
    const double an = std::abs(a);
    if (bn <= thr) {
      if (a.imag() == 0.0 && a.real() >= 0.0) {
        out.push_back(make_factor(dim, 1, 2, ComplexMatrix::identity(2)));
      } else {
        out.push_back(make_factor(dim, 1, 2, ComplexMatrix{{std::conj(a) / an, 0.0}, {0.0, 1.0}}));
      }
      return;
    }
    const double r = std::hypot(an, bn);
    out.push_back(make_factor(
        dim, 1, 2, ComplexMatrix{{std::conj(a) / r, std::conj(b) / r}, {b / r, -a / r}}));
    return;
  }

  double lead2 = 0.0;
  bool lead_zero = true;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    lead2 += std::norm(psi[i]);
    if (std::abs(psi[i]) > thr) lead_zero = false;
  }

  if (lead_zero) {
    // Move the last component to the front: phase-swap into slot m-1, then
    // plain swaps down to slot 1.
    out.push_back(make_factor(
        dim, m - 1, m, ComplexMatrix{{0.0, std::conj(b) / bn}, {b / bn, 0.0}}));
    for (std::size_t k = m - 1; k >= 2; --k) out.push_back(make_factor(dim, k - 1, k, kPauliX));
    return;
  }

  reduce_prefix(psi, m - 1, thr, out);
  if (bn <= thr) {
    out.push_back(make_factor(dim, 1, m, ComplexMatrix::identity(2)));
    return;
  }
  const double rp = std::sqrt(lead2);
  const double r = std::hypot(rp, bn);
  out.push_back(make_factor(dim, 1, m, ComplexMatrix{{rp / r, std::conj(b) / r}, {b / r, -rp / r}}));
}

Decomposition decompose_rec(const ComplexMatrix &u) {
  const std::size_t dim = u.rows();
  Decomposition d;
  d.dim = dim;
  if (dim == 2) {
    d.factors.push_back(make_factor(2, 1, 2, u));
    return d;
  }

  VectorReduction red = reduce_vector(u.column(0));
  ComplexMatrix w = u;
  for (const auto &f : red.factors) apply_factor(f, w);
  // Column 0 has unit norm and reduces to a real nonnegative first entry, so
  // the pivot is 1 up to rounding and no phase remains to absorb.
  if (std::abs(w(0, 0) - 1.0) > kReducedPivotTol) {
    throw NotUnitaryError("decompose_unitary: reduced pivot " + std::to_string(std::abs(w(0, 0))) +
                          " is not 1");
  }

  const Decomposition sub = decompose_rec(w.block(1, 1, dim - 1, dim - 1));
  d.factors.reserve(dim * (dim - 1) / 2);
  for (const auto &f : sub.factors) d.factors.push_back(make_factor(dim, f.i + 1, f.j + 1, f.v));
  for (auto it = red.factors.rbegin(); it != red.factors.rend(); ++it) {
    d.factors.push_back(make_factor(dim, it->i, it->j, adjoint(it->v)));
  }
  return d;
}

}  // namespace

ComplexMatrix TwoLevelFactor::realize() const { return k_embed(dim, i, j, v); }

GateSpec TwoLevelFactor::gate(double tol) const { return GateSpec::two_level(dim, i, j, v, tol); }

bool TwoLevelFactor::is_identity(double tol) const {
  return std::abs(v(0, 0) - 1.0) <= tol && std::abs(v(0, 1)) <= tol && std::abs(v(1, 0)) <= tol &&
         std::abs(v(1, 1) - 1.0) <= tol;
}

ComplexMatrix k_embed(std::size_t dim, std::size_t i, std::size_t j, const ComplexMatrix &v) {
  return GateSpec::two_level(dim, i, j, v).realize();
}

ComplexMatrix up_embed(const ComplexMatrix &u, double tol) {
  if (!is_unitary(u, tol)) throw NotUnitaryError("up_embed: input is not unitary");
  const std::size_t n = u.rows();
  ComplexMatrix out(n + 1, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = u(r, c);
  }
  out(n, n) = 1.0;
  return out;
}

ComplexMatrix down_embed(const ComplexMatrix &u, double tol) {
  if (!is_unitary(u, tol)) throw NotUnitaryError("down_embed: input is not unitary");
  const std::size_t n = u.rows();
  ComplexMatrix out(n + 1, n + 1);
  out(0, 0) = 1.0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r + 1, c + 1) = u(r, c);
  }
  return out;
}

VectorReduction reduce_vector(const ComplexVector &psi) {
  if (psi.dim() < 2) throw RangeError("reduce_vector: dimension must be >= 2");
  const double nrm = psi.norm();
  if (nrm == 0.0) throw Error("reduce_vector: zero vector");
  VectorReduction red;
  red.norm = nrm;
  red.factors.reserve(psi.dim() - 1);
  reduce_prefix(psi, psi.dim(), kReduceZeroTol * nrm, red.factors);
  return red;
}

Decomposition decompose_unitary(const ComplexMatrix &u, double tol) {
  if (!u.is_square() || u.rows() < 2) {
    throw RangeError("decompose_unitary: need a square matrix with N >= 2");
  }
  if (!is_unitary(u, tol)) throw NotUnitaryError("decompose_unitary: input is not unitary");
  return decompose_rec(u);
}

ComplexMatrix reconstruct(const Decomposition &d) {
  if (d.dim < 2) throw RangeError("reconstruct: dimension must be >= 2");
  ComplexMatrix m = ComplexMatrix::identity(d.dim);
  for (const auto &f : d.factors) {
    if (f.dim != d.dim) throw DimensionError("reconstruct: factor dimension mismatch");
    if (f.i < 1 || f.i >= f.j || f.j > d.dim) throw RangeError("reconstruct: bad factor indices");
    apply_factor(f, m);
  }
  return m;
}

Circuit to_circuit(const Decomposition &d, double tol) {
  Circuit c = Circuit::on_dim(d.dim);
  for (const auto &f : d.factors) c.add(f.gate(tol));
  return c;
}

Decomposition from_circuit(const Circuit &c) {
  Decomposition d;
  d.dim = c.dim();
  for (const auto &g : c.gates()) {
    if (g.kind() != GateKind::kTwoLevel) {
      throw Error("from_circuit: only TWO-LEVEL gates form a decomposition");
    }
    d.factors.push_back(TwoLevelFactor{g.index_i(), g.index_j(), g.v(), c.dim()});
  }
  return d;
}

ComplexVector apply_factors(const std::vector<TwoLevelFactor> &factors, ComplexVector x) {
  for (const auto &f : factors) {
    if (f.dim != x.dim()) throw DimensionError("apply_factors: dimension mismatch");
    apply_factor(f, x);
  }
  return x;
}

}  // namespace qsim
