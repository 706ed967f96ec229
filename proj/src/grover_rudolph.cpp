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

#include "qsim/grover_rudolph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qsim/errors.hpp"

namespace qsim {

namespace {

constexpr std::size_t kMaxTreeQubits = 20;

void check_n(std::size_t n, const char *op) {
  if (n < 1 || n > kMaxTreeQubits) {
    throw RangeError(std::string(op) + ": qubit count " + std::to_string(n) + " outside 1..20");
  }
}

BitString suffix_bits(std::uint64_t s, std::size_t len) {
  BitString z;
  z.bits.resize(len);
  for (std::size_t p = 0; p < len; ++p) z.bits[p] = static_cast<std::uint8_t>((s >> p) & 1U);
  return z;
}

}  // namespace

double trig_factor(int z, double x) { return z == 0 ? std::cos(x) : std::sin(x); }

double integrate(const Density &d, double a, double b) {
  if (!(0.0 <= a && a <= b && b <= 1.0)) {
    throw DensityError(DensityError::Kind::kDomain,
                       "integrate: need 0 <= a <= b <= 1, got [" + std::to_string(a) + ", " +
                           std::to_string(b) + "]");
  }
  return d.mass(a, b);
}

double dyadic_mass(const Density &d, std::size_t level, std::uint64_t idx) {
  if (level > 62 || idx >= (std::uint64_t{1} << level)) {
    throw RangeError("dyadic_mass: index " + std::to_string(idx) + " out of range at level " +
                     std::to_string(level));
  }
  const double scale = std::ldexp(1.0, -static_cast<int>(level));
  return integrate(d, static_cast<double>(idx) * scale, static_cast<double>(idx + 1) * scale);
}

// ---------------------------------------------------------------------------
// AngleTree

AngleTree::AngleTree(std::vector<std::vector<double>> nodes) : nodes_(std::move(nodes)) {
  check_n(nodes_.size(), "AngleTree");
  for (std::size_t level = 0; level < nodes_.size(); ++level) {
    if (nodes_[level].size() != (std::size_t{1} << level)) {
      throw DimensionError("AngleTree: level " + std::to_string(level) + " has " +
                           std::to_string(nodes_[level].size()) + " angles, expected " +
                           std::to_string(std::size_t{1} << level));
    }
  }
}

double AngleTree::node(std::size_t level, std::uint64_t index) const {
  if (level >= nodes_.size() || index >= nodes_[level].size()) {
    throw RangeError("AngleTree::node: (" + std::to_string(level) + ", " + std::to_string(index) +
                     ") out of range");
  }
  return nodes_[level][index];
}

double AngleTree::angle(const BitString &suffix) const {
  std::uint64_t s = 0;
  for (std::size_t p = 0; p < suffix.size(); ++p) s |= static_cast<std::uint64_t>(suffix[p]) << p;
  return node(suffix.size(), s);
}

double AngleTree::angle(std::string_view suffix) const {
  if (suffix.empty()) return theta();
  return angle(BitString::from_string(suffix));
}

std::size_t AngleTree::size() const noexcept { return (std::size_t{1} << nodes_.size()) - 1; }

std::vector<double> AngleTree::formula_probabilities() const {
  const std::size_t n = nodes_.size();
  std::vector<double> p(std::size_t{1} << n);
  for (std::uint64_t k = 0; k < p.size(); ++k) {
    double prod = 1.0;
    for (std::size_t j = 1; j <= n; ++j) {
      const int z = static_cast<int>((k >> (j - 1)) & 1U);
      const double t = trig_factor(z, nodes_[n - j][k >> j]);
      prod *= t * t;
    }
    p[k] = prod;
  }
  return p;
}

AngleTree angle_tree(const Density &d, std::size_t n, const AngleTreeOptions &opts) {
  check_n(n, "angle_tree");
  // Each node mass is integrated directly rather than summed from its
  // children, so every ratio sees exact-integration accuracy.
  std::vector<std::vector<double>> mass(n + 1);
  for (std::size_t level = 0; level <= n; ++level) {
    mass[level].resize(std::size_t{1} << level);
    for (std::uint64_t s = 0; s < mass[level].size(); ++s) mass[level][s] = dyadic_mass(d, level, s);
  }

  std::vector<std::vector<double>> nodes(n);
  for (std::size_t level = 0; level < n; ++level) {
    nodes[level].resize(std::size_t{1} << level);
    for (std::uint64_t s = 0; s < nodes[level].size(); ++s) {
      const double parent = mass[level][s];
      if (parent <= opts.zero_mass_tol) {
        nodes[level][s] = opts.zero_mass_angle;
        continue;
      }
      const double ratio = std::clamp(mass[level + 1][2 * s] / parent, 0.0, 1.0);
      nodes[level][s] = std::acos(std::sqrt(ratio));
    }
  }
  return AngleTree(std::move(nodes));
}

Circuit synthesize(const AngleTree &tree, bool prune) {
  const std::size_t n = tree.num_qubits();
  Circuit c = Circuit::on_qubits(n);
  const auto push = [&](GateSpec g) {
    if (prune && g.is_identity()) return;
    c.add(std::move(g));
  };
  push(GateSpec::wire(n, n, rotation(tree.theta())).with_angle(tree.theta()));
  for (std::size_t ell = 2; ell <= n; ++ell) {
    const std::size_t level = ell - 1;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << level); ++s) {
      const double a = tree.node(level, s);
      push(GateSpec::suffix_controlled(n, ell, suffix_bits(s, level), rotation(a)).with_angle(a));
    }
  }
  return c;
}

std::vector<double> target_law(const Density &d, std::size_t n) {
  check_n(n, "target_law");
  std::vector<double> p(std::size_t{1} << n);
  for (std::uint64_t k = 0; k < p.size(); ++k) p[k] = dyadic_mass(d, n, k);
  return p;
}

std::vector<double> circuit_probabilities(const Circuit &c) {
  const std::size_t n = c.num_qubits();
  if (n == 0) throw DimensionError("circuit_probabilities: circuit is not on a qubit register");
  const DensityMatrix rho0(outer(basis_vector(0, n), basis_vector(0, n)));
  return computational_observable(n).basis_probabilities(c.apply(rho0));
}

ComplexVector prepared_state(const Circuit &c) {
  const std::size_t n = c.num_qubits();
  if (n == 0) throw DimensionError("prepared_state: circuit is not on a qubit register");
  return c.apply(basis_vector(0, n));
}

bool VerifyReport::passed() const noexcept {
  return max_circuit_vs_exact <= tol && max_formula_vs_exact <= tol &&
         max_circuit_vs_formula <= tol;
}

VerifyReport verify(const Density &d, std::size_t n, double tol, const AngleTreeOptions &opts) {
  const AngleTree tree = angle_tree(d, n, opts);
  const auto exact = target_law(d, n);
  const auto formula = tree.formula_probabilities();
  const auto circuit = circuit_probabilities(synthesize(tree));

  VerifyReport r;
  r.n = n;
  r.tol = tol;
  r.exact_density = d.is_exact();
  r.rows.reserve(exact.size());
  for (std::uint64_t k = 0; k < exact.size(); ++k) {
    r.rows.push_back({k, encode(k, n), exact[k], formula[k], circuit[k]});
    r.max_circuit_vs_exact = std::max(r.max_circuit_vs_exact, std::abs(circuit[k] - exact[k]));
    r.max_formula_vs_exact = std::max(r.max_formula_vs_exact, std::abs(formula[k] - exact[k]));
    r.max_circuit_vs_formula = std::max(r.max_circuit_vs_formula, std::abs(circuit[k] - formula[k]));
    r.formula_total += formula[k];
  }
  return r;
}

}  // namespace qsim
