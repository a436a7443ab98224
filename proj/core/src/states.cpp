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

#include "qassist/states.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "qassist/errors.hpp"

namespace qassist {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

double double_angle_radians(double theta_deg) {
  if (!(theta_deg >= 0.0 && theta_deg <= 45.0)) {
    throw ParameterError("theta must lie in [0, 45] degrees, got " + std::to_string(theta_deg));
  }
  return 2.0 * theta_deg * std::numbers::pi / 180.0;
}

}  // namespace

StateVector make_pure(const PureFamily& spec) {
  const double angle = double_angle_radians(spec.theta_deg);
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  if (spec.family == Family::One) {
    return StateVector{c, 0.0, 0.0, s};
  }
  return StateVector{kInvSqrt2 * c, kInvSqrt2 * c, kInvSqrt2 * s, -kInvSqrt2 * s};
}

StateVector singlet() { return StateVector{0.0, kInvSqrt2, -kInvSqrt2, 0.0}; }

DensityMatrix make_werner(const WernerParam& w) {
  if (!(w.p >= 0.0 && w.p <= 1.0)) {
    throw ParameterError("Werner parameter must lie in [0, 1], got " + std::to_string(w.p));
  }
  const StateVector psi = singlet();
  Matrix m = Matrix::outer(psi.amplitudes(), psi.amplitudes()) * Complex(w.p);
  m += Matrix::identity(4) * Complex((1.0 - w.p) / 4.0);
  return DensityMatrix(m);
}

StateVector maximally_coherent(std::size_t dim) {
  if (dim != 2 && dim != 4) throw DimensionError("maximally coherent state defined for d = 2 or 4");
  std::array<Complex, kMaxDim> amps{};
  const double a = 1.0 / std::sqrt(static_cast<double>(dim));
  for (std::size_t i = 0; i < dim; ++i) amps[i] = a;
  return StateVector(std::span<const Complex>(amps.data(), dim));
}

DensityMatrix depolarize(const DensityMatrix& rho, double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw ParameterError("depolarizing weight must lie in [0, 1], got " + std::to_string(epsilon));
  }
  if (epsilon == 0.0) return rho;
  const auto d = static_cast<double>(rho.dim());
  return DensityMatrix(rho.matrix() * Complex(1.0 - epsilon) +
                       Matrix::identity(rho.dim()) * Complex(epsilon / d));
}

namespace kets {
StateVector h() { return StateVector{1.0, 0.0}; }
StateVector v() { return StateVector{0.0, 1.0}; }
StateVector x_plus() { return StateVector{kInvSqrt2, kInvSqrt2}; }
StateVector x_minus() { return StateVector{kInvSqrt2, -kInvSqrt2}; }
StateVector y_plus() { return StateVector{kInvSqrt2, Complex(0.0, kInvSqrt2)}; }
StateVector y_minus() { return StateVector{kInvSqrt2, Complex(0.0, -kInvSqrt2)}; }
}  // namespace kets

}  // namespace qassist
