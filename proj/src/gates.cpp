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

#include "qsim/gates.hpp"

#include <cmath>
#include <string>

#include "qsim/errors.hpp"

namespace qsim {

namespace {

constexpr std::size_t kMaxQubits = 30;

void check_v(const ComplexMatrix &v, const char *op, double tol = tol::kUnitary) {
  if (v.rows() != 2 || v.cols() != 2) {
    throw DimensionError(std::string(op) + ": gate matrix must be 2x2");
  }
  if (!is_unitary(v, tol)) throw NotUnitaryError(std::string(op) + ": v is not unitary");
}

void check_register(std::size_t n, const char *op) {
  if (n < 1 || n > kMaxQubits) {
    throw RangeError(std::string(op) + ": qubit count " + std::to_string(n) + " out of range");
  }
}

void check_wire(std::size_t n, std::size_t j, const char *op) {
  if (j < 1 || j > n) {
    throw RangeError(std::string(op) + ": wire " + std::to_string(j) + " outside 1.." +
                     std::to_string(n));
  }
}

void check_bits(const BitString &z, std::size_t len, const char *op) {
  if (z.size() != len) {
    throw RangeError(std::string(op) + ": control pattern has " + std::to_string(z.size()) +
                     " bits, expected " + std::to_string(len));
  }
  for (auto b : z.bits) {
    if (b > 1) throw RangeError(std::string(op) + ": control bit out of range");
  }
}

// |b><b| on one qubit.
ComplexMatrix bit_projector(std::uint8_t b) {
  ComplexMatrix p(2, 2);
  p(b, b) = 1.0;
  return p;
}

}  // namespace

ComplexMatrix rotation(double alpha) {
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  return ComplexMatrix{{c, -s}, {s, c}};
}

const char *to_string(GateKind kind) {
  switch (kind) {
    case GateKind::kWire:
      return "wire";
    case GateKind::kControlled:
      return "controlled";
    case GateKind::kSuffixControlled:
      return "suffix-controlled";
    case GateKind::kTwoLevel:
      return "two-level";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// GateSpec

GateSpec GateSpec::wire(std::size_t n, std::size_t j, ComplexMatrix v, double tol) {
  check_register(n, "wire");
  check_wire(n, j, "wire");
  check_v(v, "wire", tol);
  GateSpec g;
  g.kind_ = GateKind::kWire;
  g.n_ = n;
  g.dim_ = std::size_t{1} << n;
  g.a_ = j;
  g.v_ = std::move(v);
  g.build_pairs();
  return g;
}

GateSpec GateSpec::controlled(std::size_t n, std::size_t target, BitString z, ComplexMatrix v,
                              double tol) {
  check_register(n, "controlled");
  check_wire(n, target, "controlled");
  check_bits(z, n - 1, "controlled");
  check_v(v, "controlled", tol);
  GateSpec g;
  g.kind_ = GateKind::kControlled;
  g.n_ = n;
  g.dim_ = std::size_t{1} << n;
  g.a_ = target;
  g.pattern_ = std::move(z);
  g.v_ = std::move(v);
  g.build_pairs();
  return g;
}

GateSpec GateSpec::suffix_controlled(std::size_t n, std::size_t ell, BitString suffix,
                                     ComplexMatrix v, double tol) {
  check_register(n, "suffix_controlled");
  if (ell < 1 || ell > n) {
    throw RangeError("suffix_controlled: level " + std::to_string(ell) + " outside 1.." +
                     std::to_string(n));
  }
  check_bits(suffix, ell - 1, "suffix_controlled");
  check_v(v, "suffix_controlled", tol);
  GateSpec g;
  g.kind_ = GateKind::kSuffixControlled;
  g.n_ = n;
  g.dim_ = std::size_t{1} << n;
  g.a_ = n - ell + 1;
  g.b_ = ell;
  g.pattern_ = std::move(suffix);
  g.v_ = std::move(v);
  g.build_pairs();
  return g;
}

GateSpec GateSpec::two_level(std::size_t dim, std::size_t i, std::size_t j, ComplexMatrix v,
                             double tol) {
  if (dim < 2) throw RangeError("two_level: dimension must be >= 2");
  if (i < 1 || i >= j || j > dim) {
    throw RangeError("two_level: need 1 <= i < j <= N, got i=" + std::to_string(i) +
                     " j=" + std::to_string(j) + " N=" + std::to_string(dim));
  }
  check_v(v, "two_level", tol);
  GateSpec g;
  g.kind_ = GateKind::kTwoLevel;
  g.dim_ = dim;
  g.a_ = i;
  g.b_ = j;
  g.v_ = std::move(v);
  g.build_pairs();
  return g;
}

GateSpec &GateSpec::with_angle(double alpha) {
  angle_ = alpha;
  v_ = rotation(alpha);
  return *this;
}

void GateSpec::build_pairs() {
  pairs_.clear();
  if (kind_ == GateKind::kTwoLevel) {
    pairs_.emplace_back(a_ - 1, b_ - 1);
    return;
  }

  // (wire, required bit) for every control.
  std::vector<std::pair<std::size_t, std::uint8_t>> controls;
  if (kind_ == GateKind::kControlled) {
    std::size_t p = 0;
    for (std::size_t w = 1; w <= n_; ++w) {
      if (w != a_) controls.emplace_back(w, pattern_[p++]);
    }
  } else if (kind_ == GateKind::kSuffixControlled) {
    for (std::size_t p = 0; p < pattern_.size(); ++p) controls.emplace_back(a_ + 1 + p, pattern_[p]);
  }

  const std::size_t tbit = std::size_t{1} << (n_ - a_);
  pairs_.reserve(dim_ / (2 << controls.size()));
  for (std::size_t x = 0; x < dim_; ++x) {
    if (x & tbit) continue;
    bool match = true;
    for (const auto &[w, b] : controls) {
      if (((x >> (n_ - w)) & 1U) != b) {
        match = false;
        break;
      }
    }
    if (match) pairs_.emplace_back(x, x | tbit);
  }
}

bool GateSpec::is_identity(double tol) const {
  return std::abs(v_(0, 0) - 1.0) <= tol && std::abs(v_(0, 1)) <= tol &&
         std::abs(v_(1, 0)) <= tol && std::abs(v_(1, 1) - 1.0) <= tol;
}

ComplexMatrix GateSpec::realize() const {
  ComplexMatrix m = ComplexMatrix::identity(dim_);
  for (const auto &[a, b] : pairs_) {
    m(a, a) = v_(0, 0);
    m(a, b) = v_(0, 1);
    m(b, a) = v_(1, 0);
    m(b, b) = v_(1, 1);
  }
  return m;
}

void GateSpec::apply_left(ComplexMatrix &m) const {
  if (m.rows() != dim_) throw DimensionError("GateSpec::apply_left: dimension mismatch");
  const Cplx v00 = v_(0, 0), v01 = v_(0, 1), v10 = v_(1, 0), v11 = v_(1, 1);
  for (const auto &[a, b] : pairs_) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Cplx xa = m(a, c);
      const Cplx xb = m(b, c);
      m(a, c) = v00 * xa + v01 * xb;
      m(b, c) = v10 * xa + v11 * xb;
    }
  }
}

void GateSpec::apply_right_adjoint(ComplexMatrix &m) const {
  if (m.cols() != dim_) throw DimensionError("GateSpec::apply_right_adjoint: dimension mismatch");
  const Cplx w00 = std::conj(v_(0, 0)), w01 = std::conj(v_(0, 1));
  const Cplx w10 = std::conj(v_(1, 0)), w11 = std::conj(v_(1, 1));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto &[a, b] : pairs_) {
      const Cplx xa = m(r, a);
      const Cplx xb = m(r, b);
      m(r, a) = xa * w00 + xb * w01;
      m(r, b) = xa * w10 + xb * w11;
    }
  }
}

ComplexVector GateSpec::apply(const ComplexVector &psi) const {
  if (psi.dim() != dim_) throw DimensionError("GateSpec::apply: dimension mismatch");
  ComplexVector out = psi;
  for (const auto &[a, b] : pairs_) {
    out[a] = v_(0, 0) * psi[a] + v_(0, 1) * psi[b];
    out[b] = v_(1, 0) * psi[a] + v_(1, 1) * psi[b];
  }
  return out;
}

DensityMatrix GateSpec::apply(const DensityMatrix &rho) const {
  ComplexMatrix m = rho.matrix();
  apply_left(m);
  apply_right_adjoint(m);
  return DensityMatrix(std::move(m));
}

bool GateSpec::operator==(const GateSpec &o) const {
  return kind_ == o.kind_ && n_ == o.n_ && dim_ == o.dim_ && a_ == o.a_ && b_ == o.b_ &&
         pattern_ == o.pattern_ && v_ == o.v_ && angle_ == o.angle_;
}

// ---------------------------------------------------------------------------
// Circuit

Circuit Circuit::on_qubits(std::size_t n, bool strict) {
  check_register(n, "Circuit::on_qubits");
  return Circuit(n, std::size_t{1} << n, strict);
}

Circuit Circuit::on_dim(std::size_t dim, bool strict) {
  if (dim < 1) throw RangeError("Circuit::on_dim: dimension must be >= 1");
  return Circuit(0, dim, strict);
}

Circuit &Circuit::add(GateSpec g) {
  if (g.dim() != dim_) {
    throw DimensionError("Circuit::add: gate dimension " + std::to_string(g.dim()) +
                         " does not match circuit dimension " + std::to_string(dim_));
  }
  if (strict_ && !gates_.empty()) {
    ComplexMatrix m = gates_.back().realize();
    g.apply_left(m);
    if (hs_norm(m - ComplexMatrix::identity(dim_)) <= tol::kUnitary) {
      throw Error("Circuit::add: gate " + std::to_string(gates_.size() + 1) +
                  " cancels its predecessor");
    }
  }
  gates_.push_back(std::move(g));
  return *this;
}

ComplexMatrix Circuit::realize() const {
  ComplexMatrix m = ComplexMatrix::identity(dim_);
  for (const auto &g : gates_) g.apply_left(m);
  return m;
}

ComplexVector Circuit::apply(const ComplexVector &psi) const {
  if (psi.dim() != dim_) throw DimensionError("Circuit::apply: dimension mismatch");
  ComplexVector out = psi;
  for (const auto &g : gates_) out = g.apply(out);
  return out;
}

DensityMatrix Circuit::apply(const DensityMatrix &rho) const {
  if (rho.dim() != dim_) throw DimensionError("Circuit::apply: dimension mismatch");
  ComplexMatrix m = rho.matrix();
  for (const auto &g : gates_) {
    g.apply_left(m);
    g.apply_right_adjoint(m);
  }
  return DensityMatrix(std::move(m));
}

std::size_t Circuit::length(double tol) const {
  std::size_t len = 0;
  for (const auto &g : gates_) {
    if (!g.is_identity(tol)) ++len;
  }
  return len;
}

ComplexMatrix realize(const Circuit &c) { return c.realize(); }
DensityMatrix apply(const Circuit &c, const DensityMatrix &rho) { return c.apply(rho); }
std::size_t circuit_length(const Circuit &c) { return c.length(); }

// ---------------------------------------------------------------------------
// Reference constructions

ComplexMatrix wire_gate(std::size_t n, std::size_t j, const ComplexMatrix &v) {
  check_register(n, "wire_gate");
  check_wire(n, j, "wire_gate");
  check_v(v, "wire_gate");
  ComplexMatrix m = ComplexMatrix::identity(std::size_t{1} << (j - 1));
  m = kron(m, v);
  return kron(m, ComplexMatrix::identity(std::size_t{1} << (n - j)));
}

ComplexMatrix control_projector(std::size_t n, std::size_t ell, const BitString &z,
                                const ComplexMatrix &v) {
  check_register(n, "control_projector");
  check_wire(n, ell, "control_projector");
  check_bits(z, n - 1, "control_projector");
  if (v.rows() != 2 || v.cols() != 2) throw DimensionError("control_projector: v must be 2x2");
  std::vector<ComplexMatrix> factors;
  factors.reserve(n);
  std::size_t p = 0;
  for (std::size_t w = 1; w <= n; ++w) {
    factors.push_back(w == ell ? v : bit_projector(z[p++]));
  }
  return kron_all(factors);
}

ComplexMatrix controlled_gate(std::size_t n, std::size_t ell, const BitString &z,
                              const ComplexMatrix &v) {
  check_register(n, "controlled_gate");
  check_v(v, "controlled_gate");
  const ComplexMatrix id = ComplexMatrix::identity(2);
  ComplexMatrix out = control_projector(n, ell, z, v);
  const std::uint64_t patterns = std::uint64_t{1} << (n - 1);
  for (std::uint64_t k = 0; k < patterns; ++k) {
    BitString zp;
    zp.bits.resize(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) zp.bits[i] = static_cast<std::uint8_t>((k >> i) & 1U);
    if (zp == z) continue;
    out += control_projector(n, ell, zp, id);
  }
  return out;
}

ComplexMatrix suffix_controlled_gate(std::size_t n, std::size_t ell, const BitString &suffix,
                                     const ComplexMatrix &v) {
  check_register(n, "suffix_controlled_gate");
  if (ell < 1 || ell > n) throw RangeError("suffix_controlled_gate: level out of range");
  const ComplexMatrix block = controlled_gate(ell, 1, suffix, v);
  if (ell == n) return block;
  return kron(ComplexMatrix::identity(std::size_t{1} << (n - ell)), block);
}

}  // namespace qsim
