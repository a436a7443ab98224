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

#include "qassist/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qassist/errors.hpp"

namespace qassist {

namespace {

void require_dim(std::size_t dim, std::size_t expected, const char* what) {
  if (dim != expected) {
    throw DimensionError(std::string(what) + ": expected dimension " + std::to_string(expected) +
                         ", got " + std::to_string(dim));
  }
}

std::array<double, kMaxDim> clipped_spectrum(const Matrix& m) {
  const EigenDecomposition eig = eigh(m);
  std::array<double, kMaxDim> values{};
  for (std::size_t k = 0; k < eig.dim; ++k) {
    double lambda = eig.values[k];
    if (lambda < -kStateTolerance) {
      throw InvalidStateError("negative eigenvalue " + std::to_string(lambda));
    }
    values[k] = std::clamp(lambda, 0.0, 1.0);
  }
  return values;
}

Matrix psd_sqrt(const Matrix& m) {
  return spectral_apply(eigh(m), [](double x) { return x > 0.0 ? std::sqrt(x) : 0.0; });
}

}  // namespace

ValidationReport validate_density(const Matrix& rho, double tol) {
  ValidationReport report;
  const std::size_t n = rho.dim();
  if (n == 0) {
    report.hermiticity_defect = report.trace_defect = 1.0;
    report.min_eigenvalue = 0.0;
    return report;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      report.hermiticity_defect =
          std::max(report.hermiticity_defect, std::abs(rho(i, j) - std::conj(rho(j, i))));
    }
  }
  report.trace_defect = std::abs(rho.trace() - 1.0);
  report.min_eigenvalue = eigh(rho).values[0];
  report.ok = std::isfinite(report.hermiticity_defect) && std::isfinite(report.trace_defect) &&
              std::isfinite(report.min_eigenvalue) && report.hermiticity_defect <= tol &&
              report.trace_defect <= tol && report.min_eigenvalue >= -tol;
  return report;
}

DensityMatrix project_to_state(const Matrix& m) {
  const EigenDecomposition eig = eigh(m);
  double total = 0.0;
  for (std::size_t k = 0; k < eig.dim; ++k) total += std::max(eig.values[k], 0.0);
  if (!(total > 0.0)) throw InvalidStateError("matrix has no positive spectral weight");
  return DensityMatrix(spectral_apply(eig, [total](double x) { return x > 0.0 ? x / total : 0.0; }));
}

double squared_norm(std::span<const Complex> amplitudes) {
  double sum = 0.0;
  for (const auto& a : amplitudes) sum += std::norm(a);
  return sum;
}

StateVector::StateVector(std::span<const Complex> amplitudes) : dim_(amplitudes.size()) {
  if (dim_ != 2 && dim_ != 4) throw DimensionError("state vectors must have dimension 2 or 4");
  const double n2 = squared_norm(amplitudes);
  if (!(std::abs(n2 - 1.0) <= kStateTolerance)) {
    throw InvalidStateError("state vector is not normalized (|psi|^2 = " + std::to_string(n2) + ")");
  }
  std::copy(amplitudes.begin(), amplitudes.end(), data_.begin());
}

StateVector::StateVector(std::initializer_list<Complex> amplitudes)
    : StateVector(std::span<const Complex>(amplitudes.begin(), amplitudes.size())) {}

StateVector StateVector::normalized(std::span<const Complex> amplitudes) {
  if (amplitudes.size() != 2 && amplitudes.size() != 4) {
    throw DimensionError("state vectors must have dimension 2 or 4");
  }
  const double n = std::sqrt(squared_norm(amplitudes));
  if (!(n > 0.0)) throw InvalidStateError("cannot normalize the zero vector");
  StateVector out;
  out.dim_ = amplitudes.size();
  for (std::size_t i = 0; i < out.dim_; ++i) out.data_[i] = amplitudes[i] / n;
  return out;
}

DensityMatrix::DensityMatrix(const Matrix& m, double tol) {
  if (m.dim() != 2 && m.dim() != 4) throw DimensionError("density matrices must have dimension 2 or 4");
  const ValidationReport report = validate_density(m, tol);
  if (!report.ok) {
    throw InvalidStateError("invalid density matrix: hermiticity defect " +
                            std::to_string(report.hermiticity_defect) + ", trace defect " +
                            std::to_string(report.trace_defect) + ", min eigenvalue " +
                            std::to_string(report.min_eigenvalue));
  }
  m_ = m.hermitian_part();
}

DensityMatrix DensityMatrix::projector(const StateVector& psi) {
  return DensityMatrix(Matrix::outer(psi.amplitudes(), psi.amplitudes()));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  return DensityMatrix(Matrix::identity(dim) * Complex(1.0 / static_cast<double>(dim)));
}

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
  require_dim(a.dim(), 2, "tensor_product (left factor)");
  require_dim(b.dim(), 2, "tensor_product (right factor)");
  return DensityMatrix(kron(a.matrix(), b.matrix()));
}

StateVector tensor_product(const StateVector& a, const StateVector& b) {
  require_dim(a.dim(), 2, "tensor_product (left factor)");
  require_dim(b.dim(), 2, "tensor_product (right factor)");
  const std::array<Complex, 4> amps{a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]};
  return StateVector(amps);
}

Matrix partial_trace(const Matrix& rho, Subsystem keep) {
  require_dim(rho.dim(), 4, "partial_trace");
  Matrix out(2);
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 0; y < 2; ++y) {
      for (std::size_t s = 0; s < 2; ++s) {
        // Alice index is the high bit.
        out(x, y) += keep == Subsystem::A ? rho(2 * x + s, 2 * y + s) : rho(2 * s + x, 2 * s + y);
      }
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
  return DensityMatrix(partial_trace(rho.matrix(), keep));
}

Matrix partial_transpose_b(const Matrix& rho) {
  require_dim(rho.dim(), 4, "partial_transpose_b");
  Matrix out(4);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t k = 0; k < 2; ++k) {
      for (std::size_t j = 0; j < 2; ++j) {
        for (std::size_t l = 0; l < 2; ++l) out(2 * i + l, 2 * j + k) = rho(2 * i + k, 2 * j + l);
      }
    }
  }
  return out;
}

DensityMatrix dephase(const DensityMatrix& rho, DephaseScope scope) {
  const std::size_t n = rho.dim();
  if (scope == DephaseScope::BobOnly) require_dim(n, 4, "dephase(BobOnly)");
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const bool keep = scope == DephaseScope::Full ? i == j : (i & 1U) == (j & 1U);
      if (keep) out(i, j) = rho(i, j);
    }
  }
  return DensityMatrix(out);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const auto values = clipped_spectrum(rho.matrix());
  double s = 0.0;
  for (std::size_t k = 0; k < rho.dim(); ++k) {
    if (values[k] > 0.0) s -= values[k] * std::log2(values[k]);
  }
  return std::max(s, 0.0);
}

double negativity(const DensityMatrix& rho) {
  require_dim(rho.dim(), 4, "negativity");
  const EigenDecomposition eig = eigh(partial_transpose_b(rho.matrix()));
  double sum = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    if (eig.values[k] < 0.0) sum -= eig.values[k];
  }
  return sum;
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw DimensionError("fidelity of states with different dimension");
  if (rho.dim() == 2) {
    // Qubit identity tr(rho sigma) + 2 sqrt(det rho det sigma); avoids square roots of
    // round-off eigenvalues when either state is pure.
    const auto det = [](const Matrix& m) { return (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real(); };
    const double overlap = (rho.matrix() * sigma.matrix()).trace().real();
    const double dets = std::max(0.0, det(rho.matrix())) * std::max(0.0, det(sigma.matrix()));
    return std::clamp(overlap + 2.0 * std::sqrt(dets), 0.0, 1.0);
  }
  const Matrix root = psd_sqrt(rho.matrix());
  const EigenDecomposition eig = eigh(root * sigma.matrix() * root);
  double tr = 0.0;
  for (std::size_t k = 0; k < eig.dim; ++k) {
    if (eig.values[k] > 0.0) tr += std::sqrt(eig.values[k]);
  }
  return std::clamp(tr * tr, 0.0, 1.0);
}

double expectation(const DensityMatrix& rho, const StateVector& psi) {
  if (rho.dim() != psi.dim()) throw DimensionError("expectation with mismatched dimensions");
  Complex acc = 0.0;
  for (std::size_t i = 0; i < rho.dim(); ++i) {
    for (std::size_t j = 0; j < rho.dim(); ++j) acc += std::conj(psi[i]) * rho(i, j) * psi[j];
  }
  return acc.real();
}

double trace_distance(const Matrix& a, const Matrix& b) {
  const EigenDecomposition eig = eigh(a - b);
  double sum = 0.0;
  for (std::size_t k = 0; k < eig.dim; ++k) sum += std::abs(eig.values[k]);
  return 0.5 * sum;
}

}  // namespace qassist
