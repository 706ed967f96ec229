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

#include "qsim/density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qsim/errors.hpp"

namespace qsim {

namespace {

std::string seg_name(std::size_t i) { return "segment " + std::to_string(i); }

double simpson(double fa, double fm, double fb, double a, double b) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(const std::function<double(double)> &f, double a, double b, double fa,
                        double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(fa, flm, fm, a, m);
  const double right = simpson(fm, frm, fb, m, b);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

std::vector<double> derivative(const std::vector<double> &c) {
  std::vector<double> d;
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(static_cast<double>(i) * c[i]);
  return d;
}

double horner(const std::vector<double> &c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Real roots of c in (lo, hi). The roots of c' split the interval into
// monotone pieces, each holding at most one root, found by bisection.
std::vector<double> roots_in(const std::vector<double> &c, double lo, double hi) {
  if (c.size() <= 1) return {};
  std::vector<double> cuts{lo};
  for (double r : roots_in(derivative(c), lo, hi)) cuts.push_back(r);
  cuts.push_back(hi);

  std::vector<double> out;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    double a = cuts[k];
    double b = cuts[k + 1];
    double fa = horner(c, a);
    const double fb = horner(c, b);
    if (fa == 0.0 && a > lo) out.push_back(a);
    if ((fa < 0.0) == (fb < 0.0) || fb == 0.0) continue;
    for (int it = 0; it < 200 && b - a > 1e-15 * (1.0 + std::abs(a)); ++it) {
      const double m = 0.5 * (a + b);
      const double fm = horner(c, m);
      if ((fm < 0.0) == (fa < 0.0)) {
        a = m;
        fa = fm;
      } else {
        b = m;
      }
    }
    out.push_back(0.5 * (a + b));
  }
  return out;
}

}  // namespace

double PolySegment::eval(double x) const { return horner(coeffs, x); }

double PolySegment::antiderivative(double x) const {
  // sum_i c_i x^{i+1} / (i+1) by Horner in x.
  double acc = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc = acc * x + coeffs[i] / static_cast<double>(i + 1);
  }
  return acc * x;
}

PiecewisePolyDensity::PiecewisePolyDensity(std::vector<PolySegment> segments,
                                           double normalization_tol)
    : segments_(std::move(segments)) {
  using Kind = DensityError::Kind;
  if (segments_.empty()) throw DensityError(Kind::kBadPartition, "density has no segments");
  if (std::abs(segments_.front().lo) > kPartitionTol) {
    throw DensityError(Kind::kBadPartition, "first segment does not start at 0");
  }
  if (std::abs(segments_.back().hi - 1.0) > kPartitionTol) {
    throw DensityError(Kind::kBadPartition, "last segment does not end at 1");
  }
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const auto &s = segments_[i];
    if (!std::isfinite(s.lo) || !std::isfinite(s.hi) || !(s.lo < s.hi)) {
      throw DensityError(Kind::kBadPartition, seg_name(i) + " has lo >= hi");
    }
    if (s.coeffs.empty()) throw DensityError(Kind::kBadPartition, seg_name(i) + " has no coefficients");
    for (double c : s.coeffs) {
      if (!std::isfinite(c)) throw DensityError(Kind::kBadPartition, seg_name(i) + " has a non-finite coefficient");
    }
    if (i + 1 < segments_.size() && std::abs(segments_[i + 1].lo - s.hi) > kPartitionTol) {
      throw DensityError(Kind::kBadPartition, seg_name(i) + " and " + seg_name(i + 1) +
                                                  " are not contiguous");
    }
  }
  // Snap endpoints so mass() sees an exact partition.
  segments_.front().lo = 0.0;
  segments_.back().hi = 1.0;
  for (std::size_t i = 0; i + 1 < segments_.size(); ++i) segments_[i + 1].lo = segments_[i].hi;

  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const auto &s = segments_[i];
    const std::size_t k = std::max<std::size_t>(8, 2 * s.coeffs.size());
    std::vector<double> xs = {s.lo, s.hi};
    for (std::size_t j = 0; j < k; ++j) {
      const double t = std::cos((2.0 * j + 1.0) * std::numbers::pi / (2.0 * k));
      xs.push_back(0.5 * (s.lo + s.hi) + 0.5 * (s.hi - s.lo) * t);
    }
    // Interior minima sit at critical points, which sampling can miss.
    for (double x : roots_in(derivative(s.coeffs), s.lo, s.hi)) xs.push_back(x);
    for (double x : xs) {
      const double v = s.eval(x);
      if (v < kDensityFloor) {
        throw DensityError(Kind::kNegative, seg_name(i) + " is negative (" + std::to_string(v) +
                                                ") at x = " + std::to_string(x));
      }
    }
  }

  const double total = mass(0.0, 1.0);
  if (std::abs(total - 1.0) > normalization_tol) {
    throw DensityError(Kind::kNotNormalized,
                       "density integrates to " + std::to_string(total) + ", not 1");
  }
}

double PiecewisePolyDensity::operator()(double x) const {
  // Right-continuous except at 1.
  for (const auto &s : segments_) {
    if (x < s.hi) return s.eval(x);
  }
  return segments_.back().eval(x);
}

double PiecewisePolyDensity::mass(double a, double b) const {
  double acc = 0.0;
  for (const auto &s : segments_) {
    const double lo = std::max(a, s.lo);
    const double hi = std::min(b, s.hi);
    if (hi <= lo) continue;
    acc += s.antiderivative(hi) - s.antiderivative(lo);
  }
  return acc;
}

PiecewisePolyDensity PiecewisePolyDensity::uniform() {
  return PiecewisePolyDensity({PolySegment{0.0, 1.0, {1.0}}});
}

QuadratureDensity::QuadratureDensity(std::function<double(double)> f, double quad_tol)
    : f_(std::move(f)), quad_tol_(quad_tol) {
  using Kind = DensityError::Kind;
  if (!f_) throw DensityError(Kind::kDomain, "empty density function");
  for (int i = 0; i <= 1024; ++i) {
    const double x = i / 1024.0;
    const double v = f_(x);
    if (!std::isfinite(v) || v < kDensityFloor) {
      throw DensityError(Kind::kNegative, "density is negative or non-finite at x = " +
                                              std::to_string(x));
    }
  }
  const double total = mass(0.0, 1.0);
  if (std::abs(total - 1.0) > 1e-8) {
    throw DensityError(Kind::kNotNormalized,
                       "density integrates to " + std::to_string(total) + ", not 1");
  }
}

double QuadratureDensity::mass(double a, double b) const {
  if (b <= a) return 0.0;
  const double fa = f_(a);
  const double fb = f_(b);
  const double fm = f_(0.5 * (a + b));
  return adaptive_simpson(f_, a, b, fa, fm, fb, simpson(fa, fm, fb, a, b), quad_tol_, 50);
}

}  // namespace qsim
