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

#include "qassist/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qassist/errors.hpp"

namespace qassist {

namespace {

constexpr int kMaxSweeps = 64;

double off_diagonal_norm2(const Matrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return sum;
}

double frobenius_norm2(const Matrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) sum += std::norm(a(i, j));
  }
  return sum;
}

}  // namespace

Matrix::Matrix(std::size_t dim) : dim_(dim) {
  if (dim == 0 || dim > kMaxDim) throw DimensionError("matrix dimension must be in 1..4");
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::outer(std::span<const Complex> u, std::span<const Complex> v) {
  if (u.size() != v.size()) throw DimensionError("outer product of vectors with different sizes");
  Matrix m(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * std::conj(v[j]);
  }
  return m;
}

Complex Matrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::adjoint() const {
  Matrix m(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) m(i, j) = std::conj((*this)(j, i));
  }
  return m;
}

Matrix Matrix::hermitian_part() const {
  Matrix m(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    m(i, i) = (*this)(i, i).real();
    for (std::size_t j = i + 1; j < dim_; ++j) {
      m(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

double Matrix::max_abs() const {
  double best = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) best = std::max(best, std::abs((*this)(i, j)));
  }
  return best;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (other.dim_ != dim_) throw DimensionError("matrix sum with mismatched dimensions");
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) (*this)(i, j) += other(i, j);
  }
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (other.dim_ != dim_) throw DimensionError("matrix difference with mismatched dimensions");
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) (*this)(i, j) -= other(i, j);
  }
  return *this;
}

Matrix& Matrix::operator*=(Complex scale) {
  for (auto& x : data_) x *= scale;
  return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.dim() != rhs.dim()) throw DimensionError("matrix product with mismatched dimensions");
  const std::size_t n = lhs.dim();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex a = lhs(i, k);
      if (a == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

bool operator==(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.dim_ != rhs.dim_) return false;
  for (std::size_t i = 0; i < lhs.dim_; ++i) {
    for (std::size_t j = 0; j < lhs.dim_; ++j) {
      if (lhs(i, j) != rhs(i, j)) return false;
    }
  }
  return true;
}

Matrix kron(const Matrix& left, const Matrix& right) {
  const std::size_t n = left.dim() * right.dim();
  if (n > kMaxDim) throw DimensionError("Kronecker product exceeds supported dimension");
  Matrix out(n);
  const std::size_t m = right.dim();
  for (std::size_t i = 0; i < left.dim(); ++i) {
    for (std::size_t j = 0; j < left.dim(); ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t l = 0; l < m; ++l) out(i * m + k, j * m + l) = left(i, j) * right(k, l);
      }
    }
  }
  return out;
}

double max_abs_diff(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.dim() != rhs.dim()) throw DimensionError("comparing matrices of different dimension");
  return (lhs - rhs).max_abs();
}

EigenDecomposition eigh(const Matrix& m) {
  const std::size_t n = m.dim();
  Matrix a = m.hermitian_part();
  Matrix v = Matrix::identity(n);

  const double scale2 = frobenius_norm2(a);
  const double stop = scale2 * 1e-32;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm2(a) <= stop) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        // Phase-rotate column q so the pivot is real, then a real Givens rotation.
        const Complex phase = apq / mag;
        const double theta = 0.5 * std::atan2(2.0 * mag, a(p, p).real() - a(q, q).real());
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        // G acts on the (p, q) plane: columns (c, s e^{-ia}) and (-s, c e^{-ia}).
        const Complex g_pp = c;
        const Complex g_pq = -s;
        const Complex g_qp = s * std::conj(phase);
        const Complex g_qq = c * std::conj(phase);

        // a <- a G
        for (std::size_t i = 0; i < n; ++i) {
          const Complex aip = a(i, p);
          const Complex aiq = a(i, q);
          a(i, p) = aip * g_pp + aiq * g_qp;
          a(i, q) = aip * g_pq + aiq * g_qq;
        }
        // a <- G^dagger a
        for (std::size_t j = 0; j < n; ++j) {
          const Complex apj = a(p, j);
          const Complex aqj = a(q, j);
          a(p, j) = std::conj(g_pp) * apj + std::conj(g_qp) * aqj;
          a(q, j) = std::conj(g_pq) * apj + std::conj(g_qq) * aqj;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        // v <- v G
        for (std::size_t i = 0; i < n; ++i) {
          const Complex vip = v(i, p);
          const Complex viq = v(i, q);
          v(i, p) = vip * g_pp + viq * g_qp;
          v(i, q) = vip * g_pq + viq * g_qq;
        }
      }
    }
  }

  std::array<std::size_t, kMaxDim> order{};
  std::iota(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n), std::size_t{0});
  std::sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n),
            [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  EigenDecomposition out;
  out.dim = n;
  out.vectors = Matrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

const Matrix& pauli(std::size_t axis) {
  static const std::array<Matrix, 3> kPauli = [] {
    std::array<Matrix, 3> p{Matrix(2), Matrix(2), Matrix(2)};
    p[0](0, 1) = 1.0;
    p[0](1, 0) = 1.0;
    p[1](0, 1) = Complex(0.0, -1.0);
    p[1](1, 0) = Complex(0.0, 1.0);
    p[2](0, 0) = 1.0;
    p[2](1, 1) = -1.0;
    return p;
  }();
  if (axis > 2) throw DimensionError("Pauli axis must be 0, 1 or 2");
  return kPauli[axis];
}

Matrix bloch_operator(const Vec3& n) {
  Matrix m(2);
  m(0, 0) = 0.5 * (1.0 + n[2]);
  m(1, 1) = 0.5 * (1.0 - n[2]);
  m(0, 1) = 0.5 * Complex(n[0], -n[1]);
  m(1, 0) = 0.5 * Complex(n[0], n[1]);
  return m;
}

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

}  // namespace qassist
