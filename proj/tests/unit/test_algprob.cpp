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

#include <catch_amalgamated.hpp>
#include <cmath>
#include <vector>

#include "qsim/algprob.hpp"
#include "qsim/errors.hpp"
#include "test_support.hpp"

using namespace qsim;
using qsim::testing::max_diff;
using qsim::testing::random_density;
using qsim::testing::random_hermitian;
using qsim::testing::random_unit_vector;
using qsim::testing::random_unitary;
using qsim::testing::Rng;

namespace {

const ComplexMatrix kX{{0, 1}, {1, 0}};

ComplexMatrix diag(std::vector<double> d) { return ComplexMatrix::diagonal(std::span<const double>(d)); }

StateError::Kind state_error_kind(const ComplexMatrix &m) {
  try {
    validate_state(DensityMatrix(m));
  } catch (const StateError &e) {
    return e.kind();
  }
  FAIL("expected a StateError");
  return StateError::Kind::kNotHermitian;
}

}  // namespace

TEST_CASE("pure_state", "[algprob]") {
  const auto rho0 = pure_state(ComplexVector::unit(2, 0));
  CHECK(rho0.matrix() == diag({1, 0}));

  const double h = 1.0 / std::sqrt(2.0);
  const auto plus = pure_state(ComplexVector{h, h});
  for (auto x : plus.matrix().entries()) CHECK(std::abs(x - 0.5) <= 1e-15);

  Rng rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const auto rho = pure_state(random_unit_vector(6, rng));
    CHECK(std::abs(trace(rho.matrix()) - 1.0) <= 1e-12);
  }
  CHECK_THROWS_AS(pure_state(ComplexVector{1, 1}), StateError);
}

TEST_CASE("validate_state reports the rank stratum", "[algprob]") {
  CHECK(validate_state(DensityMatrix(diag({0.5, 0.5}))) == 2);

  Rng rng(22);
  CHECK(validate_state(pure_state(random_unit_vector(5, rng))) == 1);
  for (std::size_t r = 1; r <= 4; ++r) {
    CHECK(validate_state(DensityMatrix(random_density(6, r, rng))) == r);
  }

  CHECK(state_error_kind(diag({0.6, 0.6})) == StateError::Kind::kTraceNotOne);
  CHECK(state_error_kind(diag({1.2, -0.2})) == StateError::Kind::kNegativeEigenvalue);
  CHECK(state_error_kind(ComplexMatrix{{0.5, 0.1}, {0.2, 0.5}}) == StateError::Kind::kNotHermitian);
  CHECK_THROWS_AS(make_state(diag({0.6, 0.6})), StateError);
  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix(2, 3)), DimensionError);
}

TEST_CASE("event projectors", "[algprob]") {
  const Observable x(kX);
  const auto p1 = event_projector(x, 1.0);
  CHECK(max_diff(p1.proj, ComplexMatrix{{0.5, 0.5}, {0.5, 0.5}}) <= 1e-12);

  const Observable d(diag({2, 2, 5}));
  const auto p2 = event_projector(d, 2.0);
  CHECK(max_diff(p2.proj, diag({1, 1, 0})) <= 1e-12);
  CHECK(std::abs(trace(p2.proj) - 2.0) <= 1e-12);

  const auto none = event_projector(x, 0.37);
  CHECK(none.proj == ComplexMatrix(2, 2));

  CHECK_THROWS_AS(Observable(ComplexMatrix{{0, 1}, {0, 0}}), NotHermitianError);
}

TEST_CASE("event projectors are orthogonal and resolve the identity", "[algprob][property]") {
  Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 6);
    // Alternate generic and degenerate spectra.
    ComplexMatrix a;
    if (trial % 2 == 0) {
      a = random_hermitian(n, rng);
    } else {
      std::vector<double> d(n);
      for (std::size_t i = 0; i < n; ++i) d[i] = static_cast<double>(i % 3);
      const auto v = random_unitary(n, rng);
      a = v * diag(d) * adjoint(v);
    }
    const Observable obs(a);
    ComplexMatrix sum(n, n);
    const auto &evs = obs.eigenspaces();
    for (std::size_t i = 0; i < evs.size(); ++i) {
      sum += evs[i].proj;
      CHECK(max_diff(evs[i].proj * evs[i].proj, evs[i].proj) <= 1e-10);
      for (std::size_t j = i + 1; j < evs.size(); ++j) {
        CHECK(hs_norm(evs[i].proj * evs[j].proj) <= 1e-10);
        CHECK(evs[i].value < evs[j].value);
      }
    }
    CHECK(max_diff(sum, ComplexMatrix::identity(n)) <= 1e-10);
    if (trial % 2 == 1) CHECK(evs.size() == std::min<std::size_t>(n, 3));
  }
}

TEST_CASE("law of a Bernoulli observable", "[algprob]") {
  Rng rng(24);
  for (int trial = 0; trial < 10; ++trial) {
    const auto u = random_unit_vector(4, rng);
    const auto psi = random_unit_vector(4, rng);
    const Observable a(outer(u, u));
    const auto l = law(a, pure_state(psi));
    REQUIRE(l.size() == 2);
    const double cos2 = std::norm(inner(u, psi));
    CHECK(std::abs(l.outcomes[1].value - 1.0) <= 1e-10);
    CHECK(std::abs(l.outcomes[1].probability - cos2) <= 1e-10);
    CHECK(std::abs(l.outcomes[0].probability - (1.0 - cos2)) <= 1e-10);
  }

  const auto lz = law(Observable(diag({1, -1})), DensityMatrix(diag({1, 0})));
  REQUIRE(lz.size() == 2);
  CHECK(lz.outcomes[0].value == Catch::Approx(-1.0));
  CHECK(lz.outcomes[0].probability == Catch::Approx(0.0).margin(1e-15));
  CHECK(lz.outcomes[1].probability == Catch::Approx(1.0));
}

TEST_CASE("law of a mixture matches an explicit double loop", "[algprob]") {
  Rng rng(25);
  std::uniform_real_distribution<double> w(0.1, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 5;
    // Distinct eigenvalues so that each outcome has one eigenvector.
    const auto v = random_unitary(n, rng);
    const std::vector<double> lambda{-2, -0.5, 0.25, 1, 3};
    const Observable a(v * diag(lambda) * adjoint(v));

    std::vector<double> p(3);
    double tot = 0.0;
    for (auto &x : p) tot += (x = w(rng));
    std::vector<ComplexVector> psis;
    ComplexMatrix rho(n, n);
    for (std::size_t i = 0; i < 3; ++i) {
      p[i] /= tot;
      psis.push_back(random_unit_vector(n, rng));
      rho += Cplx(p[i]) * outer(psis[i], psis[i]);
    }
    const auto l = law(a, DensityMatrix(rho));
    REQUIRE(l.size() == n);
    for (std::size_t k = 0; k < n; ++k) {
      double expect = 0.0;
      for (std::size_t i = 0; i < 3; ++i) expect += p[i] * std::norm(inner(v.column(k), psis[i]));
      CHECK(std::abs(l.outcomes[k].value - lambda[k]) <= 1e-10);
      CHECK(std::abs(l.outcomes[k].probability - expect) <= 1e-10);
    }
    CHECK(std::abs(l.total() - 1.0) <= 1e-9);
  }
}

TEST_CASE("conjugate and law invariance", "[algprob]") {
  Rng rng(26);
  const auto a = random_hermitian(4, rng);
  CHECK(max_diff(conjugate(a, ComplexMatrix::identity(4)), a) <= 1e-15);

  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = std::size_t{2} << (trial % 3);
    const auto obs = random_hermitian(n, rng);
    const auto rho = random_density(n, 1 + static_cast<std::size_t>(trial) % n, rng);
    const auto v = random_unitary(n, rng);
    const auto l1 = law(Observable(obs), DensityMatrix(rho));
    const auto l2 = law(Observable(conjugate(obs, v)), DensityMatrix(conjugate(rho, v)));
    const auto cmp = compare_laws(l1, l2);
    CHECK(cmp.same_support_size);
    CHECK(cmp.max_value_diff <= 1e-8);
    CHECK(cmp.max_probability_diff <= 1e-8);
    CHECK(std::abs(trace(conjugate(rho, v)) - trace(rho)) <= 1e-12);
  }
  auto bad = ComplexMatrix::identity(2);
  bad(0, 0) = 2.0;
  CHECK_THROWS_AS(conjugate(a, bad), NotUnitaryError);
}

TEST_CASE("law rejects mismatched or invalid inputs", "[algprob]") {
  CHECK_THROWS_AS(law(Observable(kX), DensityMatrix(diag({1, 0, 0}))), DimensionError);
  CHECK_THROWS_AS(law(Observable(kX), DensityMatrix(diag({0.7, 0.7}))), StateError);
  const auto cmp = compare_laws(Law{{{0, 1}}}, Law{{{0, 0.5}, {1, 0.5}}});
  CHECK_FALSE(cmp.same_support_size);
}
