// Copyright 2026 The qassist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qassist/protocol.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>

#include "qassist/coherence.hpp"
#include "qassist/errors.hpp"

namespace qassist {

namespace {

constexpr double kParallelThreshold = 1e-9;

Vec3 scaled(const Vec3& v, double s) { return {v[0] * s, v[1] * s, v[2] * s}; }

Vec3 normalized(const Vec3& v) { return scaled(v, 1.0 / norm(v)); }

/// Bloch vector of a nonzero qubit vector (alpha, beta), after normalization.
std::optional<Vec3> bloch_of(Complex alpha, Complex beta) {
  const double n2 = std::norm(alpha) + std::norm(beta);
  if (n2 < 1e-24) return std::nullopt;
  const Complex ab = std::conj(alpha) * beta;
  return Vec3{2.0 * ab.real() / n2, 2.0 * ab.imag() / n2, (std::norm(alpha) - std::norm(beta)) / n2};
}

/// Antipodal directions define the same basis; pick y > 0, then x > 0, then z > 0.
Vec3 canonical_sign(Vec3 n) {
  constexpr double eps = 1e-12;
  double key = n[1];
  if (std::abs(key) < eps) key = n[0];
  if (std::abs(key) < eps) key = n[2];
  return key < 0.0 ? scaled(n, -1.0) : n;
}

/// Unit vector orthogonal to `axis` with the largest y-component; +x when axis is +/-y.
Vec3 orthogonal_preferring_y(const Vec3& axis) {
  const Vec3 y{0.0, 1.0, 0.0};
  Vec3 v = y;
  const double ay = dot(axis, y);
  v = {v[0] - ay * axis[0], v[1] - ay * axis[1], v[2] - ay * axis[2]};
  if (norm(v) < kParallelThreshold) {
    const Vec3 x{1.0, 0.0, 0.0};
    const double ax = dot(axis, x);
    v = {x[0] - ax * axis[0], x[1] - ax * axis[1], x[2] - ax * axis[2]};
  }
  return normalized(v);
}

DensityMatrix conditional_state(const Matrix& unnormalized, double prob) {
  const Matrix m = unnormalized * Complex(1.0 / prob);
  if (validate_density(m).ok) return DensityMatrix(m);
  return project_to_state(m);
}

}  // namespace

MeasurementBasis MeasurementBasis::from_bloch(const Vec3& n) {
  if (!(std::abs(norm(n) - 1.0) <= kStateTolerance)) {
    throw ParameterError("measurement Bloch vector must be a unit vector (|n| = " +
                         std::to_string(norm(n)) + ")");
  }
  return MeasurementBasis(n);
}

MeasurementBasis MeasurementBasis::from_direction(const Vec3& n) {
  const double len = norm(n);
  if (!(len > 0.0) || !std::isfinite(len)) throw ParameterError("measurement direction must be nonzero");
  return MeasurementBasis(scaled(n, 1.0 / len));
}

MeasurementBasis MeasurementBasis::from_angles(double polar, double azimuth) {
  const double s = std::sin(polar);
  return from_direction({s * std::cos(azimuth), s * std::sin(azimuth), std::cos(polar)});
}

double MeasurementBasis::polar() const { return std::acos(std::clamp(n_[2], -1.0, 1.0)); }

double MeasurementBasis::azimuth() const { return std::atan2(n_[1], n_[0]); }

StateVector MeasurementBasis::state(OutcomeLabel label) const {
  const double t = polar();
  const Complex phase = std::polar(1.0, azimuth());
  const double c = std::cos(0.5 * t);
  const double s = std::sin(0.5 * t);
  if (label == OutcomeLabel::Plus) return StateVector::normalized(std::array<Complex, 2>{c, phase * s});
  return StateVector::normalized(std::array<Complex, 2>{s, -phase * c});
}

Matrix MeasurementBasis::projector(OutcomeLabel label) const {
  return label == OutcomeLabel::Plus ? bloch_operator(n_) : bloch_operator(scaled(n_, -1.0));
}

OutcomeSet alice_measure(const DensityMatrix& rho_ab, const MeasurementBasis& basis) {
  if (rho_ab.dim() != 4) throw DimensionError("alice_measure needs a two-qubit state");
  OutcomeSet set;
  for (const OutcomeLabel label : {OutcomeLabel::Plus, OutcomeLabel::Minus}) {
    const Matrix lifted = kron(basis.projector(label), Matrix::identity(2));
    const Matrix unnormalized = partial_trace(lifted * rho_ab.matrix(), Subsystem::B);
    const double prob = unnormalized.trace().real();
    Outcome outcome;
    outcome.label = label;
    if (prob < kNullOutcomeProbability) {
      outcome.null_event = true;
    } else {
      outcome.prob = prob;
      outcome.bob_state = conditional_state(unnormalized, prob);
    }
    set.outcomes.push_back(outcome);
  }
  return set;
}

double average_assisted_coherence(const OutcomeSet& outcomes) {
  double total = 0.0;
  for (const auto& o : outcomes.outcomes) {
    if (o.null_event || o.prob == 0.0) continue;
    total += o.prob * rel_entropy_coherence(o.bob_state).c_r;
  }
  return total;
}

MeasurementBasis optimal_basis_pure(const StateVector& psi_ab) {
  if (psi_ab.dim() != 4) throw DimensionError("optimal_basis_pure needs a two-qubit state vector");
  // a_k = <k|_B |psi>, Alice amplitudes indexed by her bit.
  const auto a_h = bloch_of(psi_ab[0], psi_ab[2]);
  const auto a_v = bloch_of(psi_ab[1], psi_ab[3]);
  if (!a_h && !a_v) throw InvalidStateError("zero state vector");

  if (a_h && a_v) {
    const Vec3 c = cross(*a_h, *a_v);
    if (norm(c) >= kParallelThreshold) return MeasurementBasis::from_direction(canonical_sign(c));
  }
  const Vec3& axis = a_h ? *a_h : *a_v;
  return MeasurementBasis::from_direction(canonical_sign(orthogonal_preferring_y(axis)));
}

BasisOptimum optimize_basis(const DensityMatrix& rho_ab, int grid_res, int refine_iters) {
  if (rho_ab.dim() != 4) throw DimensionError("optimize_basis needs a two-qubit state");
  const auto objective = [&](double polar, double azimuth) {
    return average_assisted_coherence(alice_measure(rho_ab, MeasurementBasis::from_angles(polar, azimuth)));
  };
  SphereSearchResult search = maximize_on_hemisphere(objective, grid_res, refine_iters);
  BasisOptimum out;
  out.basis = MeasurementBasis::from_angles(search.best.polar, search.best.azimuth);
  out.value = search.best.value;
  out.trace = std::move(search.trace);
  out.grid_step = search.grid_step;
  return out;
}

}  // namespace qassist
