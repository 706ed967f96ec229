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

#include "qsim/qpu.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>

#include "qsim/errors.hpp"
#include "qsim/rng.hpp"

namespace qsim {

namespace {

constexpr std::size_t kMaxQubits = 62;

void check_qubits(std::size_t n, const char *op) {
  if (n < 1 || n > kMaxQubits) {
    throw RangeError(std::string(op) + ": qubit count " + std::to_string(n) + " out of range");
  }
}

void check_label(std::uint64_t k, std::size_t n, const char *op) {
  check_qubits(n, op);
  if (k >> n != 0) {
    throw RangeError(std::string(op) + ": label " + std::to_string(k) + " >= 2^" +
                     std::to_string(n));
  }
}

}  // namespace

std::string BitString::to_string() const {
  if (bits.empty()) return "-";
  std::string s;
  s.reserve(bits.size());
  for (auto b : bits) s.push_back(b ? '1' : '0');
  return s;
}

BitString BitString::from_string(std::string_view s) {
  BitString out;
  if (s == "-") return out;
  if (s.empty()) throw ParseError("empty bit string");
  for (char c : s) {
    if (c != '0' && c != '1') throw ParseError("bad bit string '" + std::string(s) + "'");
    out.bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return out;
}

BitString encode(std::uint64_t k, std::size_t n) {
  check_label(k, n, "encode");
  BitString z;
  z.bits.resize(n);
  for (std::size_t i = 0; i < n; ++i) z.bits[i] = static_cast<std::uint8_t>((k >> i) & 1U);
  return z;
}

std::uint64_t decode(const BitString &bits) {
  check_qubits(bits.size(), "decode");
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] > 1) throw RangeError("decode: bit value out of range");
    k |= static_cast<std::uint64_t>(bits[i]) << i;
  }
  return k;
}

std::size_t flat_index(std::uint64_t k, std::size_t n) {
  check_label(k, n, "flat_index");
  // z_j (bit j-1 of k) sits at array weight 2^{n-j}: a bit reversal.
  std::size_t flat = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if ((k >> j) & 1U) flat |= std::size_t{1} << (n - 1 - j);
  }
  return flat;
}

std::uint64_t label_of_flat_index(std::size_t flat, std::size_t n) {
  // Bit reversal is an involution.
  return flat_index(flat, n);
}

ComplexVector basis_vector(std::uint64_t k, std::size_t n) {
  return ComplexVector::unit(std::size_t{1} << n, flat_index(k, n));
}

std::vector<double> basis_probabilities(const ComplexVector &psi) {
  const std::size_t dim = psi.dim();
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw DimensionError("basis_probabilities: dimension is not a power of two");
  }
  const auto n = static_cast<std::size_t>(std::countr_zero(dim));
  std::vector<double> p(dim);
  for (std::uint64_t k = 0; k < dim; ++k) p[k] = std::norm(psi[flat_index(k, n)]);
  return p;
}

// ---------------------------------------------------------------------------
// QpuObservable

QpuObservable::QpuObservable(std::vector<Observable> factors) : factors_(std::move(factors)) {
  check_qubits(factors_.size(), "qpu_observable");
  const std::size_t n = factors_.size();

  std::vector<ComplexMatrix> mats;
  std::vector<ComplexMatrix> bases;
  std::vector<std::array<double, 2>> lambdas;
  for (const auto &f : factors_) {
    if (f.dim() != 2) throw DimensionError("qpu_observable: factors must be 2x2");
    const ComplexMatrix &m = f.matrix();
    mats.push_back(m);
    if (std::abs(m(0, 1)) <= tol::kEntrywise && std::abs(m(1, 0)) <= tol::kEntrywise) {
      bases.push_back(ComplexMatrix::identity(2));
      lambdas.push_back({m(0, 0).real(), m(1, 1).real()});
    } else {
      computational_ = false;
      bases.push_back(f.spectral().vectors);
      lambdas.push_back({f.spectral().values[0], f.spectral().values[1]});
    }
  }
  realized_ = Observable(kron_all(mats));
  basis_ = kron_all(bases);

  labels_.resize(std::size_t{1} << n);
  for (std::uint64_t k = 0; k < labels_.size(); ++k) {
    double lam = 1.0;
    for (std::size_t j = 0; j < n; ++j) lam *= lambdas[j][(k >> j) & 1U];
    labels_[k] = lam;
  }
}

std::vector<double> QpuObservable::basis_probabilities(const DensityMatrix &rho) const {
  if (rho.dim() != dim()) throw DimensionError("basis_probabilities: dimension mismatch");
  const std::size_t n = num_qubits();
  const ComplexMatrix &r = rho.matrix();
  std::vector<double> p(dim());
  for (std::uint64_t k = 0; k < dim(); ++k) {
    const std::size_t c = flat_index(k, n);
    double pk;
    if (computational_) {
      pk = r(c, c).real();
    } else {
      Cplx s{};
      for (std::size_t i = 0; i < dim(); ++i) {
        const Cplx wi = std::conj(basis_(i, c));
        if (wi == Cplx{}) continue;
        for (std::size_t j = 0; j < dim(); ++j) s += wi * r(i, j) * basis_(j, c);
      }
      pk = s.real();
    }
    if (pk < -kProbabilityClamp) {
      throw StateError(StateError::Kind::kNegativeEigenvalue,
                       "basis_probabilities: negative probability " + std::to_string(pk));
    }
    p[k] = std::clamp(pk, 0.0, 1.0);
  }
  return p;
}

Law QpuObservable::basis_law(const DensityMatrix &rho) const {
  const auto p = basis_probabilities(rho);
  Law out;
  out.outcomes.reserve(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) out.outcomes.push_back({static_cast<double>(k), p[k]});
  return out;
}

Law QpuObservable::law(const DensityMatrix &rho, double tol) const {
  return qsim::law(realized_, rho, tol);
}

QpuObservable qpu_observable(std::vector<Observable> factors) {
  return QpuObservable(std::move(factors));
}

QpuObservable computational_observable(std::size_t n) {
  check_qubits(n, "computational_observable");
  const Observable z(ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}});
  return QpuObservable(std::vector<Observable>(n, z));
}

Udqc make_udqc(std::size_t n) { return make_udqc(computational_observable(n)); }

Udqc make_udqc(QpuObservable observable) {
  const std::size_t n = observable.num_qubits();
  DensityMatrix rho0(outer(basis_vector(0, n), basis_vector(0, n)));
  return Udqc{std::move(observable), std::move(rho0)};
}

// ---------------------------------------------------------------------------
// Dynamics

DensityMatrix evolve(const ComplexMatrix &u, const DensityMatrix &rho, double tol) {
  if (u.rows() != rho.dim() || !u.is_square()) {
    throw DimensionError("evolve: unitary and state dimensions differ");
  }
  if (!is_unitary(u, tol)) throw NotUnitaryError("evolve: U is not unitary");
  return DensityMatrix(matmul(matmul(u, rho.matrix()), adjoint(u)));
}

DensityMatrix liouville_solve(const ComplexMatrix &h, const DensityMatrix &rho0, double t,
                              double tol) {
  if (h.rows() != rho0.dim() || !h.is_square()) {
    throw DimensionError("liouville_solve: Hamiltonian and state dimensions differ");
  }
  const ComplexMatrix u = unitary_from_hamiltonian(h, t, tol);
  return DensityMatrix(matmul(matmul(u, rho0.matrix()), adjoint(u)));
}

// ---------------------------------------------------------------------------
// Sampling

std::uint64_t ShotResult::count(std::uint64_t k) const {
  const auto it = counts.find(k);
  return it == counts.end() ? 0 : it->second;
}

std::vector<std::uint64_t> ShotResult::dense(std::size_t size) const {
  std::vector<std::uint64_t> out(size, 0);
  for (const auto &[k, c] : counts) {
    if (k >= size) throw RangeError("ShotResult::dense: outcome beyond requested size");
    out[k] = c;
  }
  return out;
}

ShotResult sample(std::span<const double> probabilities, std::uint64_t shots,
                  std::uint64_t seed) {
  if (probabilities.empty()) throw Error("sample: empty distribution");
  if (shots == 0) throw RangeError("sample: shots must be >= 1");

  std::vector<double> cdf(probabilities.size());
  double acc = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    const double p = probabilities[i];
    if (!(p >= 0.0) || !std::isfinite(p)) throw Error("sample: invalid probability");
    if (p > 0.0) last_positive = i;
    acc += p;
    cdf[i] = acc;
  }
  if (acc <= 0.0) throw Error("sample: distribution has no mass");

  ShotResult out;
  out.shots = shots;
  out.seed = seed;
  SplitMix64 rng(seed);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = rng.uniform01() * acc;
    // First i with u < cdf[i]; zero-mass outcomes can never be selected.
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    std::size_t k = it == cdf.end() ? last_positive : static_cast<std::size_t>(it - cdf.begin());
    ++out.counts[k];
  }
  return out;
}

ShotResult sample(const Law &law, std::uint64_t shots, std::uint64_t seed) {
  std::vector<double> p;
  p.reserve(law.size());
  for (const auto &o : law.outcomes) p.push_back(o.probability);
  return sample(p, shots, seed);
}

}  // namespace qsim
