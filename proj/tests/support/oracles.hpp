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

// Independent reference computations for tests. Nothing here calls the
// library's eigen solver or coherence routines.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qassist/matrix.hpp"

namespace qassist::oracle {

inline double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

inline double binary_entropy(double x) { return -xlog2x(x) - xlog2x(1.0 - x); }

inline double shannon(const std::vector<double>& probs) {
  double s = 0.0;
  for (const double p : probs) s -= xlog2x(p);
  return s;
}

inline Eigen::MatrixXcd to_eigen(const Matrix& m) {
  Eigen::MatrixXcd out(m.dim(), m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = m(i, j);
  }
  return out;
}

/// Ascending eigenvalues via Eigen's self-adjoint solver.
inline std::vector<double> eigenvalues(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m));
  const auto& v = solver.eigenvalues();
  return {v.data(), v.data() + v.size()};
}

/// von Neumann entropy (bits) from Eigen's spectrum, clipping tiny negatives.
inline double entropy(const Matrix& m) {
  double s = 0.0;
  for (double lambda : eigenvalues(m)) s -= xlog2x(std::clamp(lambda, 0.0, 1.0));
  return s;
}

/// Relative entropy of coherence: Shannon entropy of the diagonal minus von Neumann entropy.
inline double coherence(const Matrix& m) {
  std::vector<double> diag;
  for (std::size_t i = 0; i < m.dim(); ++i) diag.push_back(m(i, i).real());
  return shannon(diag) - entropy(m);
}

}  // namespace qassist::oracle
