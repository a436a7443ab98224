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
#include <complex>
#include <cstddef>
#include <span>

namespace qassist {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;

inline constexpr std::size_t kMaxDim = 4;

/// Dense square complex matrix of dimension 1..4, stored row-major in place.
///
/// This is the raw algebra carrier. It carries no physical invariants; see
/// DensityMatrix for the validated state type.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim);

  static Matrix identity(std::size_t dim);
  /// Outer product |u><v| of two equally sized amplitude vectors.
  static Matrix outer(std::span<const Complex> u, std::span<const Complex> v);

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * kMaxDim + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * kMaxDim + col];
  }

  Complex trace() const;
  Matrix adjoint() const;
  /// (M + M^dagger) / 2
  Matrix hermitian_part() const;
  double max_abs() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(Complex scale);

  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(Matrix lhs, Complex scale) { return lhs *= scale; }
  friend Matrix operator*(Complex scale, Matrix rhs) { return rhs *= scale; }
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);

  friend bool operator==(const Matrix& lhs, const Matrix& rhs);

 private:
  std::size_t dim_ = 0;
  std::array<Complex, kMaxDim * kMaxDim> data_{};
};

/// Kronecker product; `left` is the slow (most significant) index.
Matrix kron(const Matrix& left, const Matrix& right);

/// Largest entrywise modulus of lhs - rhs.
double max_abs_diff(const Matrix& lhs, const Matrix& rhs);

struct EigenDecomposition {
  std::size_t dim = 0;
  /// Ascending.
  std::array<double, kMaxDim> values{};
  /// Column k is the unit eigenvector for values[k].
  Matrix vectors;
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
///
/// Only the Hermitian part of `m` is used. Converges to machine precision for
/// the dimensions supported here; the result is deterministic.
EigenDecomposition eigh(const Matrix& m);

/// Rebuilds V diag(f(lambda)) V^dagger from a decomposition.
template <typename Fn>
Matrix spectral_apply(const EigenDecomposition& eig, Fn&& fn) {
  Matrix out(eig.dim);
  for (std::size_t k = 0; k < eig.dim; ++k) {
    const double w = fn(eig.values[k]);
    if (w == 0.0) continue;
    for (std::size_t i = 0; i < eig.dim; ++i) {
      for (std::size_t j = 0; j < eig.dim; ++j) {
        out(i, j) += w * eig.vectors(i, k) * std::conj(eig.vectors(j, k));
      }
    }
  }
  return out;
}

/// Pauli matrices X, Y, Z indexed 0..2.
const Matrix& pauli(std::size_t axis);

/// (I + n.sigma) / 2 for any real 3-vector n (not necessarily unit).
Matrix bloch_operator(const Vec3& n);

double dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);

}  // namespace qassist
