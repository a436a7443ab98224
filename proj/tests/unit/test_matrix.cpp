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

#include <gtest/gtest.h>

#include "qassist/errors.hpp"
#include "qassist/matrix.hpp"
#include "qassist/rng.hpp"
#include "support/oracles.hpp"

namespace qassist {
namespace {

Matrix random_hermitian(CounterRng& rng, std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = rng.next_normal();
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = Complex(rng.next_normal(), rng.next_normal());
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

TEST(Eigh, MatchesEigenOnRandomHermitian) {
  CounterRng rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = trial % 2 == 0 ? 4 : 2;
    const Matrix m = random_hermitian(rng, n);
    const EigenDecomposition eig = eigh(m);
    const auto expected = oracle::eigenvalues(m);
    for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(eig.values[k], expected[k], 1e-12);

    // A v = lambda v
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        Complex av = 0.0;
        for (std::size_t j = 0; j < n; ++j) av += m(i, j) * eig.vectors(j, k);
        EXPECT_LT(std::abs(av - eig.values[k] * eig.vectors(i, k)), 1e-11);
      }
    }
    // V is unitary
    const Matrix vv = eig.vectors.adjoint() * eig.vectors;
    EXPECT_LT(max_abs_diff(vv, Matrix::identity(n)), 1e-12);
  }
}

TEST(Eigh, DegenerateAndDiagonalInputs) {
  const EigenDecomposition id = eigh(Matrix::identity(4));
  for (std::size_t k = 0; k < 4; ++k) EXPECT_DOUBLE_EQ(id.values[k], 1.0);

  Matrix d(2);
  d(0, 0) = 0.3;
  d(1, 1) = -0.2;
  const EigenDecomposition e = eigh(d);
  EXPECT_DOUBLE_EQ(e.values[0], -0.2);
  EXPECT_DOUBLE_EQ(e.values[1], 0.3);
}

TEST(Kron, IndexFormula) {
  CounterRng rng(3);
  Matrix a(2), b(2);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      a(i, j) = Complex(rng.next_normal(), rng.next_normal());
      b(i, j) = Complex(rng.next_normal(), rng.next_normal());
    }
  }
  const Matrix k = kron(a, b);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t kk = 0; kk < 2; ++kk)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t l = 0; l < 2; ++l) EXPECT_EQ(k(2 * i + kk, 2 * j + l), a(i, j) * b(kk, l));
}

TEST(Matrix, RejectsUnsupportedDimensions) {
  EXPECT_THROW(Matrix(0), DimensionError);
  EXPECT_THROW(Matrix(5), DimensionError);
  EXPECT_THROW(kron(Matrix(4), Matrix(2)), DimensionError);
  EXPECT_THROW(Matrix(2) * Matrix(4), DimensionError);
}

TEST(Pauli, AlgebraAndBlochOperator) {
  const Matrix& x = pauli(0);
  const Matrix& y = pauli(1);
  const Matrix& z = pauli(2);
  EXPECT_LT(max_abs_diff(x * y, z * Complex(0.0, 1.0)), 1e-15);
  EXPECT_LT(max_abs_diff(bloch_operator({0.0, 0.0, 1.0}), Matrix::outer(std::vector<Complex>{1.0, 0.0},
                                                                          std::vector<Complex>{1.0, 0.0})),
            1e-15);
  EXPECT_THROW(pauli(3), DimensionError);
}

}  // namespace
}  // namespace qassist
