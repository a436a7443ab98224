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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qassist/qcore.hpp"

namespace qassist {

enum class PauliAxis { X = 0, Y = 1, Z = 2 };

struct BasisCounts {
  std::int64_t plus = 0;
  std::int64_t minus = 0;

  friend bool operator==(const BasisCounts&, const BasisCounts&) = default;
};

/// Photon counts for the three Pauli bases of one qubit.
struct TomographyRecord {
  std::array<BasisCounts, 3> counts{};  // indexed by PauliAxis
  std::int64_t shots_per_basis = 0;
  std::uint64_t seed = 0;

  const BasisCounts& operator[](PauliAxis axis) const { return counts[static_cast<std::size_t>(axis)]; }

  friend bool operator==(const TomographyRecord&, const TomographyRecord&) = default;
};

/// Throws ParameterError if counts are negative or do not add up to shots_per_basis.
void validate_record(const TomographyRecord& record);

/// {"seed": u64, "shots": int, "counts": {"X": [n+, n-], "Y": [...], "Z": [...]}}
std::string record_to_json(const TomographyRecord& record);
TomographyRecord record_from_json(std::string_view text);

/// Draws Binomial(shots, tr(P+ rho)) per Pauli basis. Basis k uses the stream
/// derive_stream_seed(seed, k, 0), so the record is a pure function of its inputs.
TomographyRecord simulate_counts(const DensityMatrix& rho, std::int64_t shots_per_basis, std::uint64_t seed);

/// Exact expected counts (rounded) for noise-free tests.
TomographyRecord expected_counts(const DensityMatrix& rho, std::int64_t shots_per_basis);

enum class ReconstructionMethod { Linear, Mle };

struct ReconstructionResult {
  DensityMatrix state = DensityMatrix::maximally_mixed(2);
  ReconstructionMethod method = ReconstructionMethod::Linear;
  int iterations = 0;
  bool converged = false;
  /// Set when the estimate had to be regularized (eigenvalue clipping for the
  /// linear method, identity blending for MLE).
  bool regularized = false;
  /// MLE only: log-likelihood after each accepted iterate, starting at I/2.
  std::vector<double> log_likelihood;
};

/// Bloch estimate r_k = (n+ - n-)/shots; clipped onto the Bloch ball if |r| > 1.
ReconstructionResult reconstruct_linear(const TomographyRecord& record);
ReconstructionResult reconstruct_from_stokes(const Vec3& stokes);

inline constexpr int kDefaultMleIterations = 10'000;
inline constexpr double kDefaultMleTolerance = 1e-10;

/// Iterative R rho R maximum-likelihood reconstruction starting from I/2.
ReconstructionResult reconstruct_mle(const TomographyRecord& record, int max_iters = kDefaultMleIterations,
                                     double tol = kDefaultMleTolerance);

/// sum_j n_j log tr(P_j rho) over the six Pauli projectors with n_j > 0.
double log_likelihood(const TomographyRecord& record, const DensityMatrix& rho);

}  // namespace qassist
