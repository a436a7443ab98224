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

#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>

#include "qassist/matrix.hpp"

namespace qassist {

/// Default tolerance for state invariants (hermiticity, trace, positivity, norm).
inline constexpr double kStateTolerance = 1e-10;

enum class Subsystem { A, B };

enum class DephaseScope { Full, BobOnly };

struct ValidationReport {
  double hermiticity_defect = 0.0;
  double trace_defect = 0.0;
  double min_eigenvalue = 0.0;
  bool ok = false;
};

/// Checks a candidate density operator. Never throws for bad numerical content.
ValidationReport validate_density(const Matrix& rho, double tol = kStateTolerance);

/// Unit-norm amplitude vector of dimension 2 or 4. Index order |HH>,|HV>,|VH>,|VV>.
class StateVector {
 public:
  /// Throws InvalidStateError unless the squared norm is 1 within kStateTolerance.
  explicit StateVector(std::span<const Complex> amplitudes);
  StateVector(std::initializer_list<Complex> amplitudes);

  /// Normalizes first; throws on a zero vector.
  static StateVector normalized(std::span<const Complex> amplitudes);

  std::size_t dim() const { return dim_; }
  std::span<const Complex> amplitudes() const { return {data_.data(), dim_}; }
  const Complex& operator[](std::size_t i) const { return data_[i]; }

 private:
  StateVector() = default;
  std::size_t dim_ = 0;
  std::array<Complex, kMaxDim> data_{};
};

/// Hermitian, trace-one, positive semidefinite operator on 1 or 2 qubits.
///
/// Construction validates; the stored matrix is the Hermitian part of the input
/// so downstream spectra are real.
class DensityMatrix {
 public:
  explicit DensityMatrix(const Matrix& m, double tol = kStateTolerance);

  static DensityMatrix projector(const StateVector& psi);
  static DensityMatrix maximally_mixed(std::size_t dim);

  std::size_t dim() const { return m_.dim(); }
  const Matrix& matrix() const { return m_; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

 private:
  Matrix m_;
};

/// Hermitian part with negative eigenvalues set to zero, renormalized to unit trace.
DensityMatrix project_to_state(const Matrix& m);

/// Squared norm of amplitudes.
double squared_norm(std::span<const Complex> amplitudes);

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b);
StateVector tensor_product(const StateVector& a, const StateVector& b);

/// Traces out the complement of `keep` from a two-qubit operator.
Matrix partial_trace(const Matrix& rho, Subsystem keep);
DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);

Matrix partial_transpose_b(const Matrix& rho);

DensityMatrix dephase(const DensityMatrix& rho, DephaseScope scope = DephaseScope::Full);

/// Eigenvalues in [-1e-10, 0) are clipped to 0; more negative ones raise InvalidStateError.
double von_neumann_entropy(const DensityMatrix& rho);

double negativity(const DensityMatrix& rho);

/// Uhlmann fidelity (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// <psi|rho|psi>
double expectation(const DensityMatrix& rho, const StateVector& psi);

/// Half the trace norm of the difference.
double trace_distance(const Matrix& a, const Matrix& b);

}  // namespace qassist
