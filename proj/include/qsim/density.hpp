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
 * @file density.hpp
 * Probability densities on [0, 1] with interval masses.
 */

#include <functional>
#include <vector>

namespace qsim {

/// Partition endpoints may disagree by this much and still count as contiguous.
inline constexpr double kPartitionTol = 1e-12;
/// Smallest admissible density value at a sample point.
inline constexpr double kDensityFloor = -1e-12;
/// Allowed |integral - 1| for exact densities.
inline constexpr double kNormalizationTol = 1e-10;

class Density {
 public:
  virtual ~Density() = default;

  /// Value at x in [0, 1].
  virtual double operator()(double x) const = 0;
  /// Integral over [a, b], 0 <= a <= b <= 1; bounds are not checked here.
  virtual double mass(double a, double b) const = 0;
  /// True when mass() is exact up to rounding; false for quadrature.
  virtual bool is_exact() const = 0;
};

/// One polynomial piece, coefficients in ascending degree of absolute x:
/// p(x) = c0 + c1 x + c2 x^2 + ...
struct PolySegment {
  double lo = 0.0;
  double hi = 1.0;
  std::vector<double> coeffs;

  double eval(double x) const;
  /// Antiderivative with P(0) = 0.
  double antiderivative(double x) const;
};

/**
 * A density given by polynomial segments partitioning [0, 1].
 *
 * The constructor throws DensityError when the segments do not partition
 * [0, 1] (kBadPartition), a segment dips below kDensityFloor at any of its
 * Chebyshev sample points, endpoints or critical points (kNegative), or the
 * total integral is off by more than normalization_tol (kNotNormalized).
 */
class PiecewisePolyDensity final : public Density {
 public:
  explicit PiecewisePolyDensity(std::vector<PolySegment> segments,
                                double normalization_tol = kNormalizationTol);

  const std::vector<PolySegment> &segments() const noexcept { return segments_; }

  double operator()(double x) const override;
  double mass(double a, double b) const override;
  bool is_exact() const override { return true; }

  /// The uniform density 1 on [0, 1].
  static PiecewisePolyDensity uniform();

 private:
  std::vector<PolySegment> segments_;
};

/**
 * An arbitrary nonnegative function integrated by adaptive Simpson
 * quadrature. Masses are approximate (absolute tolerance `quad_tol` per
 * call), so laws built from this density are only as good as the quadrature.
 *
 * The constructor checks the function on a 1025-point grid for negative
 * values and requires the total mass within 1e-8 of 1.
 */
class QuadratureDensity final : public Density {
 public:
  explicit QuadratureDensity(std::function<double(double)> f, double quad_tol = 1e-12);

  double operator()(double x) const override { return f_(x); }
  double mass(double a, double b) const override;
  bool is_exact() const override { return false; }

 private:
  std::function<double(double)> f_;
  double quad_tol_;
};

}  // namespace qsim
