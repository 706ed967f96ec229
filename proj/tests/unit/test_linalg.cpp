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

#include <Eigen/Dense>
#include <algorithm>
#include <catch_amalgamated.hpp>
#include <cmath>
#include <vector>

#include "qsim/errors.hpp"
#include "qsim/gates.hpp"
#include "qsim/linalg.hpp"
#include "test_support.hpp"

using namespace qsim;
using qsim::testing::max_diff;
using qsim::testing::naive_product;
using qsim::testing::random_hermitian;
using qsim::testing::random_matrix;
using qsim::testing::random_unit_vector;
using qsim::testing::random_unitary;
using qsim::testing::random_vector;
using qsim::testing::Rng;

namespace {

const ComplexMatrix kX{{0, 1}, {1, 0}};
const Cplx kI{0.0, 1.0};

ComplexMatrix pow_diag(const std::vector<double> &lambda, double t) {
  std::vector<Cplx> d;
  for (double l : lambda) d.push_back(std::exp(-kI * t * l));
  return ComplexMatrix::diagonal(std::span<const Cplx>(d));
}

}  // namespace

TEST_CASE("matmul matches the identity, involution and a triple loop", "[linalg]") {
  CHECK(matmul(ComplexMatrix::identity(2), kX) == kX);
  CHECK(matmul(kX, kX) == ComplexMatrix::identity(2));

  Rng rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_matrix(3, 3, rng);
    const auto b = random_matrix(3, 3, rng);
    CHECK(max_diff(matmul(a, b), naive_product(a, b)) <= 1e-13);
  }
  const auto a = random_matrix(2, 3, rng);
  const auto b = random_matrix(3, 4, rng);
  CHECK(max_diff(a * b, naive_product(a, b)) <= 1e-13);
  CHECK_THROWS_AS(matmul(b, a), DimensionError);
}

TEST_CASE("adjoint", "[linalg]") {
  const ComplexMatrix sym{{1, 2}, {2, 5}};
  CHECK(adjoint(sym) == sym);
  const ComplexMatrix m{{0, kI}, {0, 0}};
  const ComplexMatrix expect{{0, 0}, {-kI, 0}};
  CHECK(adjoint(m) == expect);

  Rng rng(2);
  const auto a = random_matrix(4, 3, rng);
  CHECK(adjoint(adjoint(a)) == a);
  CHECK(adjoint(a).rows() == 3);
}

TEST_CASE("kron identities", "[linalg]") {
  CHECK(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)) == ComplexMatrix::identity(4));

  Rng rng(3);
  for (std::size_t d : {2U, 3U}) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto a = random_matrix(d, d, rng);
      const auto b = random_matrix(d, d, rng);
      const auto c = random_matrix(d, d, rng);
      const auto e = random_matrix(d, d, rng);
      CHECK(max_diff(kron(a, c) * kron(b, e), kron(a * b, c * e)) <= 1e-12);
      CHECK(std::abs(trace(kron(a, b)) - trace(a) * trace(b)) <= 1e-12);
      CHECK(max_diff(adjoint(kron(a, b)), kron(adjoint(a), adjoint(b))) <= 1e-15);
    }
  }

  // Entry (i1*rows(b) + i2, j1*cols(b) + j2) is a(i1,j1) b(i2,j2).
  const auto a = random_matrix(2, 3, rng);
  const auto b = random_matrix(3, 2, rng);
  const auto k = kron(a, b);
  REQUIRE(k.rows() == 6);
  REQUIRE(k.cols() == 6);
  for (std::size_t i1 = 0; i1 < 2; ++i1)
    for (std::size_t j1 = 0; j1 < 3; ++j1)
      for (std::size_t i2 = 0; i2 < 3; ++i2)
        for (std::size_t j2 = 0; j2 < 2; ++j2)
          CHECK(k(i1 * 3 + i2, j1 * 2 + j2) == a(i1, j1) * b(i2, j2));

  const std::vector<ComplexMatrix> three{kX, ComplexMatrix::identity(2), kX};
  CHECK(kron_all(three) == kron(kron(kX, ComplexMatrix::identity(2)), kX));
  CHECK_THROWS_AS(kron_all(std::span<const ComplexMatrix>{}), DimensionError);

  const ComplexVector u{1, 2};
  const ComplexVector v{3, kI};
  const ComplexVector uv = kron(u, v);
  CHECK(uv.dim() == 4);
  CHECK(uv[1] == kI);
  CHECK(uv[2] == Cplx(6.0, 0.0));
}

TEST_CASE("trace", "[linalg]") {
  CHECK(trace(ComplexMatrix::identity(5)) == Cplx(5.0, 0.0));
  Rng rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const auto psi = random_vector(4, rng);
    const auto phi = random_vector(4, rng);
    CHECK(std::abs(trace(outer(psi, phi)) - inner(phi, psi)) <= 1e-12);

    const auto a = random_matrix(3, 3, rng);
    const auto b = random_matrix(3, 3, rng);
    const auto c = random_matrix(3, 3, rng);
    CHECK(std::abs(trace(a * b * c) - trace(b * c * a)) <= 1e-12);
  }
  CHECK_THROWS_AS(trace(random_matrix(2, 3, rng)), DimensionError);
}

TEST_CASE("Hilbert-Schmidt inner product and norm", "[linalg]") {
  CHECK(hs_inner(ComplexMatrix::identity(2), kX) == Cplx(0.0, 0.0));

  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto psi = random_vector(5, rng);
    CHECK(std::abs(hs_norm(outer(psi, psi)) - psi.norm() * psi.norm()) <= 1e-12);
    const auto u = random_unit_vector(5, rng);
    CHECK(std::abs(hs_norm(outer(u, u)) - 1.0) <= 1e-12);

    const auto a = random_matrix(4, 4, rng);
    const Cplx aa = hs_inner(a, a);
    CHECK(aa.real() >= 0.0);
    CHECK(std::abs(aa.imag()) <= 1e-12);
    CHECK(std::abs(std::sqrt(aa.real()) - hs_norm(a)) <= 1e-12);

    const auto b = random_matrix(4, 4, rng);
    CHECK(std::abs(hs_inner(a, b) - trace(adjoint(a) * b)) <= 1e-12);
  }
}

TEST_CASE("outer product", "[linalg]") {
  const auto e1 = ComplexVector::unit(2, 0);
  const ComplexMatrix expect{{1, 0}, {0, 0}};
  CHECK(outer(e1, e1) == expect);

  Rng rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    const auto psi = random_vector(4, rng);
    const auto phi = random_vector(4, rng);
    const auto chi = random_vector(4, rng);
    const auto lhs = outer(psi, phi) * chi;
    const auto rhs = inner(phi, chi) * psi;
    CHECK(max_abs_diff(lhs, rhs) <= 1e-12);

    // Rank one: every 2x2 minor vanishes.
    const auto m = outer(psi, phi);
    double worst = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t k = i + 1; k < 4; ++k)
        for (std::size_t j = 0; j < 4; ++j)
          for (std::size_t l = j + 1; l < 4; ++l)
            worst = std::max(worst, std::abs(m(i, j) * m(k, l) - m(i, l) * m(k, j)));
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("hermitian_eig on diagonal and Pauli-X inputs", "[linalg][eig]") {
  const std::vector<double> d{3, 1, 2};
  const auto sd = hermitian_eig(ComplexMatrix::diagonal(std::span<const double>(d)));
  REQUIRE(sd.values.size() == 3);
  CHECK(sd.values[0] == Catch::Approx(1.0).margin(1e-15));
  CHECK(sd.values[1] == Catch::Approx(2.0).margin(1e-15));
  CHECK(sd.values[2] == Catch::Approx(3.0).margin(1e-15));
  // Permutation eigenvectors: column 0 is +-e_2, column 1 is +-e_3, column 2 is +-e_1.
  CHECK(std::abs(sd.vectors(1, 0)) == Catch::Approx(1.0));
  CHECK(std::abs(sd.vectors(2, 1)) == Catch::Approx(1.0));
  CHECK(std::abs(sd.vectors(0, 2)) == Catch::Approx(1.0));

  const auto sx = hermitian_eig(kX);
  CHECK(sx.values[0] == Catch::Approx(-1.0).margin(1e-15));
  CHECK(sx.values[1] == Catch::Approx(1.0).margin(1e-15));

  CHECK_THROWS_AS(hermitian_eig(ComplexMatrix{{0, 1}, {0, 0}}), NotHermitianError);
  CHECK_THROWS_AS(hermitian_eig(ComplexMatrix(2, 3)), DimensionError);
}

TEST_CASE("hermitian_eig agrees with Eigen and reconstructs", "[linalg][eig]") {
  Rng rng(7);
  for (std::size_t n : {1U, 2U, 3U, 5U, 8U, 16U}) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto a = random_hermitian(n, rng);
      const auto sd = hermitian_eig(a);

      Eigen::MatrixXcd ea(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) ea(i, j) = a(i, j);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(ea);
      REQUIRE(solver.info() == Eigen::Success);
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(std::abs(sd.values[i] - solver.eigenvalues()(static_cast<Eigen::Index>(i))) <= 1e-10);
      }

      CHECK(is_unitary(sd.vectors, 1e-10));
      const auto rebuilt = sd.vectors * ComplexMatrix::diagonal(std::span<const double>(sd.values)) *
                           adjoint(sd.vectors);
      CHECK(max_diff(rebuilt, a) <= 1e-10);
      CHECK(std::is_sorted(sd.values.begin(), sd.values.end()));
    }
  }
}

TEST_CASE("hermitian_eig handles degenerate spectra", "[linalg][eig]") {
  Rng rng(8);
  const auto v = random_unitary(6, rng);
  const std::vector<double> d{2, 2, 2, -1, -1, 5};
  const auto a = v * ComplexMatrix::diagonal(std::span<const double>(d)) * adjoint(v);
  const auto sd = hermitian_eig(a);
  const std::vector<double> expect{-1, -1, 2, 2, 2, 5};
  for (std::size_t i = 0; i < 6; ++i) CHECK(std::abs(sd.values[i] - expect[i]) <= 1e-10);
  CHECK(is_unitary(sd.vectors, 1e-10));
}

TEST_CASE("is_unitary and is_hermitian", "[linalg]") {
  for (std::size_t n : {1U, 4U, 7U}) CHECK(is_unitary(ComplexMatrix::identity(n)));
  Rng rng(9);
  std::uniform_real_distribution<double> angle(-10.0, 10.0);
  for (int trial = 0; trial < 20; ++trial) CHECK(is_unitary(rotation(angle(rng))));

  auto bumped = ComplexMatrix::identity(3);
  bumped(0, 0) += 1e-3;
  CHECK_FALSE(is_unitary(bumped, 1e-9));
  CHECK_FALSE(is_unitary(ComplexMatrix(2, 3)));

  CHECK(is_hermitian(random_hermitian(5, rng)));
  CHECK_FALSE(is_hermitian(ComplexMatrix{{0, kI}, {kI, 0}}));
}

TEST_CASE("unitary_from_hamiltonian", "[linalg]") {
  CHECK(max_diff(unitary_from_hamiltonian(ComplexMatrix(4, 4), 1.7), ComplexMatrix::identity(4)) <=
        1e-15);

  const std::vector<double> lambda{0.5, -2.0, 3.25};
  const auto h = ComplexMatrix::diagonal(std::span<const double>(lambda));
  CHECK(max_diff(unitary_from_hamiltonian(h, 0.8), pow_diag(lambda, 0.8)) <= 1e-14);

  Rng rng(10);
  for (int trial = 0; trial < 10; ++trial) {
    const auto hr = random_hermitian(5, rng);
    const double s = 0.37;
    const double t = -1.21;
    const auto lhs = unitary_from_hamiltonian(hr, s + t);
    const auto rhs = unitary_from_hamiltonian(hr, s) * unitary_from_hamiltonian(hr, t);
    CHECK(max_diff(lhs, rhs) <= 1e-10);
    CHECK(is_unitary(lhs, 1e-10));
  }
}

TEST_CASE("commutator and structural helpers", "[linalg]") {
  const ComplexMatrix z{{1, 0}, {0, -1}};
  // [X, Z] = -2iY with Y = [[0, -i], [i, 0]].
  const ComplexMatrix expect{{0, -2}, {2, 0}};
  CHECK(max_diff(commutator(kX, z), expect) <= 0.0);

  Rng rng(11);
  const auto m = random_matrix(4, 5, rng);
  const auto blk = m.block(1, 2, 2, 3);
  CHECK(blk(0, 0) == m(1, 2));
  CHECK(blk(1, 2) == m(2, 4));
  CHECK_THROWS_AS(m.block(3, 3, 2, 3), RangeError);
  CHECK(m.column(3)[2] == m(2, 3));
  CHECK_THROWS_AS(ComplexMatrix(2, 2, std::vector<Cplx>(3)), DimensionError);
  CHECK_THROWS_AS(ComplexVector::unit(3, 3), RangeError);
}
