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
#include <numbers>
#include <vector>

#include "qsim/errors.hpp"
#include "qsim/grover_rudolph.hpp"
#include "test_support.hpp"

using namespace qsim;
using qsim::testing::LocalPolyDensity;
using qsim::testing::random_local_density;
using qsim::testing::Rng;

namespace {

constexpr double kPi = std::numbers::pi;

PiecewisePolyDensity triangular() {
  return PiecewisePolyDensity({PolySegment{0.0, 0.5, {0.0, 4.0}}, PolySegment{0.5, 1.0, {4.0, -4.0}}});
}

PiecewisePolyDensity powers_of_two() {
  const double h = 8.0 / 3.0;
  return PiecewisePolyDensity({PolySegment{0.0, 0.125, {0.0}}, PolySegment{0.125, 0.375, {h}},
                               PolySegment{0.375, 0.5, {0.0}}, PolySegment{0.5, 0.625, {h}},
                               PolySegment{0.625, 1.0, {0.0}}});
}

// Exact dyadic masses of the triangular density from 2x^2 and 4x - 2x^2.
double triangular_cdf(double x) { return x <= 0.5 ? 2.0 * x * x : 4.0 * x - 2.0 * x * x - 1.0; }

/// Node angles computed from the local-form oracle, zero-mass parents mapped
/// to `zero_angle`.
std::vector<std::vector<double>> oracle_nodes(const LocalPolyDensity &d, std::size_t n, double zero_angle) {
  std::vector<std::vector<double>> nodes(n);
  for (std::size_t level = 0; level < n; ++level) {
    const double w = std::ldexp(1.0, -static_cast<int>(level));
    for (std::size_t s = 0; s < (std::size_t{1} << level); ++s) {
      const double lo = static_cast<double>(s) * w;
      const double parent = d.mass(lo, lo + w);
      const double left = d.mass(lo, lo + 0.5 * w);
      nodes[level].push_back(parent <= 1e-14 ? zero_angle : std::acos(std::sqrt(std::min(1.0, left / parent))));
    }
  }
  return nodes;
}

}  // namespace

TEST_CASE("trig factors", "[grover_rudolph]") {
  CHECK(trig_factor(0, 0.0) == 1.0);
  CHECK(std::abs(trig_factor(1, kPi / 6) - 0.5) <= 1e-15);
  Rng rng(81);
  std::uniform_real_distribution<double> x(-10.0, 10.0);
  for (int i = 0; i < 20; ++i) {
    const double v = x(rng);
    CHECK(std::abs(trig_factor(0, v) * trig_factor(0, v) + trig_factor(1, v) * trig_factor(1, v) - 1.0) <= 1e-15);
  }
}

TEST_CASE("integrate and dyadic_mass", "[grover_rudolph]") {
  const auto d = triangular();
  CHECK(std::abs(integrate(d, 0.375, 0.5) - 0.21875) <= 1e-15);
  CHECK(std::abs(integrate(d, 0.0, 1.0) - 1.0) <= 1e-15);
  CHECK(std::abs(integrate(PiecewisePolyDensity::uniform(), 0.2, 0.7) - 0.5) <= 1e-15);
  CHECK(std::abs(dyadic_mass(d, 1, 0) - 0.5) <= 1e-15);
  CHECK(std::abs(dyadic_mass(d, 3, 3) - 7.0 / 32) <= 1e-15);
  for (std::size_t level = 0; level <= 6; ++level) {
    double tot = 0.0;
    for (std::uint64_t i = 0; i < (1U << level); ++i) tot += dyadic_mass(d, level, i);
    CHECK(std::abs(tot - 1.0) <= 1e-14);
  }
  CHECK_THROWS_AS(integrate(d, 0.5, 0.25), DensityError);
  CHECK_THROWS_AS(integrate(d, -0.1, 0.25), DensityError);
  CHECK_THROWS_AS(dyadic_mass(d, 2, 4), RangeError);
}

TEST_CASE("triangular angle tree", "[grover_rudolph]") {
  const auto tree = angle_tree(triangular(), 3);
  CHECK(tree.size() == 7);
  CHECK(std::abs(tree.theta() - kPi / 4) <= 1e-12);
  CHECK(std::abs(tree.angle("-") - kPi / 4) <= 1e-12);
  CHECK(std::abs(tree.angle("0") - kPi / 3) <= 1e-12);
  CHECK(std::abs(tree.angle("1") - kPi / 6) <= 1e-12);
  CHECK(std::abs(tree.angle("00") - kPi / 3) <= 1e-12);
  CHECK(std::abs(tree.angle("11") - kPi / 6) <= 1e-12);
  CHECK(std::abs(tree.angle("01") - std::acos(std::sqrt(21.0) / 6)) <= 1e-12);
  CHECK(std::abs(tree.angle("10") - std::acos(std::sqrt(15.0) / 6)) <= 1e-12);

  const auto law = target_law(triangular(), 3);
  const std::vector<double> expect{1, 3, 5, 7, 7, 5, 3, 1};
  for (std::size_t k = 0; k < 8; ++k) {
    const double lo = static_cast<double>(k) / 8;
    CHECK(std::abs(law[k] - expect[k] / 32) <= 1e-15);
    CHECK(std::abs(law[k] - (triangular_cdf(lo + 0.125) - triangular_cdf(lo))) <= 1e-15);
  }

  const auto c = synthesize(tree);
  CHECK(c.gate_count() == 7);
  CHECK(c.gates()[0].kind() == GateKind::kWire);
  CHECK(c.gates()[0].target() == 3);
  for (std::size_t g = 1; g < 3; ++g) CHECK(c.gates()[g].level() == 2);
  for (std::size_t g = 3; g < 7; ++g) CHECK(c.gates()[g].level() == 3);
  const auto p = circuit_probabilities(c);
  for (std::size_t k = 0; k < 8; ++k) CHECK(std::abs(p[k] - expect[k] / 32) <= 1e-10);
}

TEST_CASE("powers-of-two density", "[grover_rudolph]") {
  const auto tree = angle_tree(powers_of_two(), 3);
  // The left half holds 2/3 of the mass, so theta = arccos sqrt(2/3).
  CHECK(std::abs(tree.theta() - std::acos(std::sqrt(2.0 / 3.0))) <= 1e-12);
  CHECK(std::abs(tree.angle("0") - kPi / 4) <= 1e-12);
  CHECK(std::abs(tree.angle("1") - 0.0) <= 1e-12);
  CHECK(std::abs(tree.angle("00") - kPi / 2) <= 1e-12);
  CHECK(std::abs(tree.angle("10") - 0.0) <= 1e-12);
  CHECK(std::abs(tree.angle("01") - 0.0) <= 1e-12);
  CHECK(std::abs(tree.angle("11") - kPi / 2) <= 1e-12);  // zero-mass parent

  const auto pruned = synthesize(tree, true);
  CHECK(pruned.gate_count() == 4);
  CHECK(synthesize(tree).gate_count() == 7);
  const auto p = circuit_probabilities(pruned);
  for (std::size_t k = 0; k < 8; ++k) {
    const double expect = (k == 1 || k == 2 || k == 4) ? 1.0 / 3 : 0.0;
    CHECK(std::abs(p[k] - expect) <= 1e-10);
  }

  // Zero-mass angle 0 turns that gate into an identity and pruning drops it.
  AngleTreeOptions zero;
  zero.zero_mass_angle = 0.0;
  const auto tree0 = angle_tree(powers_of_two(), 3, zero);
  CHECK(tree0.angle("11") == 0.0);
  CHECK(synthesize(tree0, true).gate_count() == 3);
  CHECK(verify(powers_of_two(), 3, 1e-10, zero).passed());
}

TEST_CASE("uniform density gives pi/4 everywhere", "[grover_rudolph]") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto tree = angle_tree(PiecewisePolyDensity::uniform(), n);
    for (const auto &level : tree.nodes())
      for (double a : level) CHECK(std::abs(a - kPi / 4) <= 1e-12);
    for (double p : target_law(PiecewisePolyDensity::uniform(), n)) CHECK(std::abs(p - std::ldexp(1.0, -static_cast<int>(n))) <= 1e-15);
  }
  const auto one = synthesize(angle_tree(triangular(), 1));
  CHECK(one.gate_count() == 1);
  CHECK(one.length() == 1);
}

TEST_CASE("random densities: angles, laws and amplitudes", "[grover_rudolph][property]") {
  Rng rng(82);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 8);
    const auto local = random_local_density(rng, 3 + static_cast<std::size_t>(trial % 4), 3, trial % 3 == 0);
    const auto d = local.to_density();
    const auto tree = angle_tree(d, n);

    const auto nodes = oracle_nodes(local, n, kPi / 2);
    for (std::size_t level = 0; level < n; ++level)
      for (std::size_t s = 0; s < nodes[level].size(); ++s)
        CHECK(std::abs(tree.node(level, s) - nodes[level][s]) <= 1e-9);

    const auto formula = tree.formula_probabilities();
    double tot = 0.0;
    for (double p : formula) tot += p;
    CHECK(std::abs(tot - 1.0) <= 1e-10);

    const auto c = synthesize(tree);
    CHECK(c.gate_count() == (std::size_t{1} << n) - 1);

    // Amplitudes are the square roots of the dyadic masses, all real and >= 0.
    const auto psi = prepared_state(c);
    const double w = std::ldexp(1.0, -static_cast<int>(n));
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
      const Cplx a = psi[flat_index(k, n)];
      const double lo = static_cast<double>(k) * w;
      CHECK(std::abs(a.imag()) == 0.0);
      CHECK(a.real() >= -1e-15);
      CHECK(std::abs(a.real() * a.real() - local.mass(lo, lo + w)) <= 1e-10);
    }
    if (n <= 6) CHECK(verify(d, n, 1e-10).passed());
  }
}

TEST_CASE("angle tree structure", "[grover_rudolph]") {
  const AngleTree t({{0.1}, {0.2, 0.3}});
  CHECK(t.num_qubits() == 2);
  CHECK(t.angle(BitString::from_string("1")) == 0.3);
  CHECK(t.angle("") == 0.1);
  CHECK_THROWS_AS(t.node(2, 0), RangeError);
  CHECK_THROWS_AS(t.node(1, 2), RangeError);
  CHECK_THROWS_AS(AngleTree({{0.1}, {0.2}}), DimensionError);
  CHECK_THROWS_AS(AngleTree(std::vector<std::vector<double>>{}), RangeError);
  CHECK_THROWS_AS(angle_tree(triangular(), 0), RangeError);

  // Formula probabilities straight from the product of squared trig factors.
  const auto p = t.formula_probabilities();
  const double c0 = std::cos(0.1), s0 = std::sin(0.1);
  CHECK(std::abs(p[0] - c0 * c0 * std::cos(0.2) * std::cos(0.2)) <= 1e-15);
  CHECK(std::abs(p[1] - c0 * c0 * std::sin(0.2) * std::sin(0.2)) <= 1e-15);
  CHECK(std::abs(p[2] - s0 * s0 * std::cos(0.3) * std::cos(0.3)) <= 1e-15);
  CHECK(std::abs(p[3] - s0 * s0 * std::sin(0.3) * std::sin(0.3)) <= 1e-15);
}

TEST_CASE("verify reports", "[grover_rudolph]") {
  const auto r = verify(triangular(), 3, 1e-10);
  CHECK(r.passed());
  CHECK(r.exact_density);
  CHECK(r.rows.size() == 8);
  CHECK(std::abs(r.formula_total - 1.0) <= 1e-12);
  CHECK(r.rows[3].bits.to_string() == "110");
  CHECK(verify(triangular(), 1, 1e-10).passed());

  const QuadratureDensity q([](double x) { return x < 0.5 ? 4.0 * x : 4.0 - 4.0 * x; });
  const auto rq = verify(q, 3, 1e-9);
  CHECK_FALSE(rq.exact_density);
  CHECK(rq.passed());
}
