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

#include "qsim/algprob.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qsim/errors.hpp"

namespace qsim {

DensityMatrix::DensityMatrix(ComplexMatrix mat) : mat_(std::move(mat)) {
  if (!mat_.is_square() || mat_.empty()) {
    throw DimensionError("DensityMatrix: expected a non-empty square matrix");
  }
}

DensityMatrix pure_state(const ComplexVector &psi, double tol) {
  const double nrm = psi.norm();
  if (std::abs(nrm - 1.0) > tol) {
    throw StateError(StateError::Kind::kNotNormalized,
                     "pure_state: ||psi|| = " + std::to_string(nrm) + " is not 1");
  }
  return DensityMatrix(outer(psi, psi));
}

std::size_t validate_state(const DensityMatrix &rho, double tol) {
  const ComplexMatrix &m = rho.matrix();
  if (!is_hermitian(m, tol)) {
    throw StateError(StateError::Kind::kNotHermitian, "state is not Hermitian");
  }
  const Cplx tr = trace(m);
  if (std::abs(tr - 1.0) > tol) {
    throw StateError(StateError::Kind::kTraceNotOne,
                     "state trace " + std::to_string(tr.real()) + " is not 1");
  }
  const SpectralDecomp sd = hermitian_eig(m, tol);
  if (sd.values.front() < -tol) {
    throw StateError(StateError::Kind::kNegativeEigenvalue,
                     "state has eigenvalue " + std::to_string(sd.values.front()));
  }
  return static_cast<std::size_t>(
      std::count_if(sd.values.begin(), sd.values.end(), [tol](double v) { return v > tol; }));
}

DensityMatrix make_state(ComplexMatrix mat, double tol) {
  DensityMatrix rho(std::move(mat));
  validate_state(rho, tol);
  return rho;
}

Observable::Observable(ComplexMatrix mat, double tol, double cluster_tol) : mat_(std::move(mat)) {
  spectral_ = hermitian_eig(mat_, tol);
  const std::size_t n = mat_.rows();
  const double cluster_abs = cluster_tol * hs_norm(mat_);

  std::size_t start = 0;
  while (start < n) {
    std::size_t stop = start + 1;
    while (stop < n && spectral_.values[stop] - spectral_.values[stop - 1] <= cluster_abs) ++stop;

    EventProjector ev;
    double sum = 0.0;
    ev.proj = ComplexMatrix(n, n);
    for (std::size_t k = start; k < stop; ++k) {
      sum += spectral_.values[k];
      for (std::size_t i = 0; i < n; ++i) {
        const Cplx ui = spectral_.vectors(i, k);
        if (ui == Cplx{}) continue;
        for (std::size_t j = 0; j < n; ++j) {
          ev.proj(i, j) += ui * std::conj(spectral_.vectors(j, k));
        }
      }
    }
    ev.value = sum / static_cast<double>(stop - start);
    eigenspaces_.push_back(std::move(ev));
    start = stop;
  }
}

EventProjector event_projector(const Observable &a, double x, double tol) {
  for (const auto &ev : a.eigenspaces()) {
    if (std::abs(ev.value - x) <= tol) return ev;
  }
  return EventProjector{x, ComplexMatrix(a.dim(), a.dim())};
}

double Law::total() const {
  double s = 0.0;
  for (const auto &o : outcomes) s += o.probability;
  return s;
}

Law law(const Observable &a, const DensityMatrix &rho, double tol) {
  if (a.dim() != rho.dim()) throw DimensionError("law: observable and state dimensions differ");
  validate_state(rho, tol);

  Law out;
  out.outcomes.reserve(a.eigenspaces().size());
  for (const auto &ev : a.eigenspaces()) {
    // Re tr(rho P) = Re (rho, P)_HS since rho is Hermitian.
    double p = hs_inner(rho.matrix(), ev.proj).real();
    if (p < -kProbabilityClamp) {
      throw StateError(StateError::Kind::kNegativeEigenvalue,
                       "law: negative probability " + std::to_string(p));
    }
    p = std::clamp(p, 0.0, 1.0);
    out.outcomes.push_back({ev.value, p});
  }
  if (std::abs(out.total() - 1.0) > kLawSumTolerance) {
    throw StateError(StateError::Kind::kTraceNotOne,
                     "law: probabilities sum to " + std::to_string(out.total()));
  }
  return out;
}

ComplexMatrix conjugate(const ComplexMatrix &m, const ComplexMatrix &v, double tol) {
  if (!is_unitary(v, tol)) throw NotUnitaryError("conjugate: V is not unitary");
  return matmul(matmul(v, m), adjoint(v));
}

LawComparison compare_laws(const Law &a, const Law &b) {
  LawComparison cmp;
  cmp.same_support_size = a.size() == b.size();
  if (!cmp.same_support_size) return cmp;
  for (std::size_t i = 0; i < a.size(); ++i) {
    cmp.max_value_diff =
        std::max(cmp.max_value_diff, std::abs(a.outcomes[i].value - b.outcomes[i].value));
    cmp.max_probability_diff = std::max(
        cmp.max_probability_diff, std::abs(a.outcomes[i].probability - b.outcomes[i].probability));
  }
  return cmp;
}

}  // namespace qsim
