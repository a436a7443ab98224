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

#include "qassist/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <nlohmann/json.hpp>

#include "qassist/errors.hpp"
#include "qassist/rng.hpp"

namespace qassist {

namespace {

constexpr std::array<const char*, 3> kAxisNames{"X", "Y", "Z"};
constexpr double kVanishingProbability = 1e-15;
constexpr double kBlendWeight = 1e-6;
constexpr int kMaxDilutionHalvings = 40;

struct Projector {
  Matrix op;
  std::int64_t count = 0;
};

Vec3 axis_vector(std::size_t axis, double sign) {
  Vec3 n{0.0, 0.0, 0.0};
  n[axis] = sign;
  return n;
}

std::array<Projector, 6> pauli_projectors(const TomographyRecord& record) {
  std::array<Projector, 6> out;
  for (std::size_t a = 0; a < 3; ++a) {
    out[2 * a] = {bloch_operator(axis_vector(a, 1.0)), record.counts[a].plus};
    out[2 * a + 1] = {bloch_operator(axis_vector(a, -1.0)), record.counts[a].minus};
  }
  return out;
}

double born(const Matrix& projector, const Matrix& rho) { return (projector * rho).trace().real(); }

double plus_probability(const DensityMatrix& rho, std::size_t axis) {
  return std::clamp(0.5 * (1.0 + (pauli(axis) * rho.matrix()).trace().real()), 0.0, 1.0);
}

double likelihood_of(const std::array<Projector, 6>& projectors, const Matrix& rho) {
  double ll = 0.0;
  for (const auto& p : projectors) {
    if (p.count == 0) continue;
    const double prob = born(p.op, rho);
    if (!(prob > 0.0)) return -std::numeric_limits<double>::infinity();
    ll += static_cast<double>(p.count) * std::log(prob);
  }
  return ll;
}

Matrix normalized_sandwich(const Matrix& left, const Matrix& rho) {
  Matrix next = left * rho * left.adjoint();
  return (next * Complex(1.0 / next.trace().real())).hermitian_part();
}

}  // namespace

void validate_record(const TomographyRecord& record) {
  if (record.shots_per_basis < 1) throw ParameterError("shots per basis must be at least 1");
  for (std::size_t a = 0; a < 3; ++a) {
    const auto& c = record.counts[a];
    if (c.plus < 0 || c.minus < 0 || c.plus + c.minus != record.shots_per_basis) {
      throw ParameterError(std::string("counts for basis ") + kAxisNames[a] + " do not sum to shots_per_basis");
    }
  }
}

std::string record_to_json(const TomographyRecord& record) {
  nlohmann::json counts;
  for (std::size_t a = 0; a < 3; ++a) {
    counts[kAxisNames[a]] = {record.counts[a].plus, record.counts[a].minus};
  }
  const nlohmann::json j{{"seed", record.seed}, {"shots", record.shots_per_basis}, {"counts", counts}};
  return j.dump();
}

TomographyRecord record_from_json(std::string_view text) {
  TomographyRecord record;
  try {
    const auto j = nlohmann::json::parse(text);
    record.seed = j.at("seed").get<std::uint64_t>();
    record.shots_per_basis = j.at("shots").get<std::int64_t>();
    for (std::size_t a = 0; a < 3; ++a) {
      const auto& pair = j.at("counts").at(kAxisNames[a]);
      if (!pair.is_array() || pair.size() != 2) throw ParameterError("each basis needs [n_plus, n_minus]");
      record.counts[a] = {pair[0].get<std::int64_t>(), pair[1].get<std::int64_t>()};
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("malformed tomography record: ") + e.what());
  }
  validate_record(record);
  return record;
}

TomographyRecord simulate_counts(const DensityMatrix& rho, std::int64_t shots_per_basis, std::uint64_t seed) {
  if (rho.dim() != 2) throw DimensionError("tomography simulates single-qubit states only");
  if (shots_per_basis < 1) throw ParameterError("shots per basis must be at least 1");
  TomographyRecord record;
  record.shots_per_basis = shots_per_basis;
  record.seed = seed;
  for (std::size_t a = 0; a < 3; ++a) {
    CounterRng rng(derive_stream_seed(seed, a, 0));
    const std::int64_t plus = sample_binomial(rng, shots_per_basis, plus_probability(rho, a));
    record.counts[a] = {plus, shots_per_basis - plus};
  }
  return record;
}

TomographyRecord expected_counts(const DensityMatrix& rho, std::int64_t shots_per_basis) {
  if (rho.dim() != 2) throw DimensionError("tomography simulates single-qubit states only");
  if (shots_per_basis < 1) throw ParameterError("shots per basis must be at least 1");
  TomographyRecord record;
  record.shots_per_basis = shots_per_basis;
  for (std::size_t a = 0; a < 3; ++a) {
    const auto plus = static_cast<std::int64_t>(
        std::llround(static_cast<double>(shots_per_basis) * plus_probability(rho, a)));
    record.counts[a] = {plus, shots_per_basis - plus};
  }
  return record;
}

ReconstructionResult reconstruct_from_stokes(const Vec3& stokes) {
  ReconstructionResult result;
  result.method = ReconstructionMethod::Linear;
  result.converged = true;
  const Matrix candidate = bloch_operator(stokes);
  if (norm(stokes) <= 1.0) {
    result.state = DensityMatrix(candidate);
  } else {
    result.state = project_to_state(candidate);
    result.regularized = true;
  }
  return result;
}

ReconstructionResult reconstruct_linear(const TomographyRecord& record) {
  validate_record(record);
  const auto shots = static_cast<double>(record.shots_per_basis);
  Vec3 r{};
  for (std::size_t a = 0; a < 3; ++a) {
    r[a] = static_cast<double>(record.counts[a].plus - record.counts[a].minus) / shots;
  }
  return reconstruct_from_stokes(r);
}

double log_likelihood(const TomographyRecord& record, const DensityMatrix& rho) {
  if (rho.dim() != 2) throw DimensionError("tomography log-likelihood needs a qubit state");
  return likelihood_of(pauli_projectors(record), rho.matrix());
}

ReconstructionResult reconstruct_mle(const TomographyRecord& record, int max_iters, double tol) {
  validate_record(record);
  if (max_iters < 1) throw ParameterError("max_iters must be at least 1");
  const auto projectors = pauli_projectors(record);
  const auto shots = static_cast<double>(record.shots_per_basis);

  ReconstructionResult result;
  result.method = ReconstructionMethod::Mle;
  Matrix rho = Matrix::identity(2) * Complex(0.5);
  double ll = likelihood_of(projectors, rho);
  result.log_likelihood.push_back(ll);

  for (int it = 1; it <= max_iters; ++it) {
    bool vanishing = false;
    for (const auto& p : projectors) {
      if (p.count > 0 && born(p.op, rho) < kVanishingProbability) vanishing = true;
    }
    if (vanishing) {
      rho = (rho + Matrix::identity(2) * Complex(kBlendWeight)) * Complex(1.0 / (1.0 + 2.0 * kBlendWeight));
      result.regularized = true;
      ll = likelihood_of(projectors, rho);
    }

    // R normalized so that R = I at the fixed point (the six projectors sum to 3I).
    Matrix r(2);
    for (const auto& p : projectors) {
      if (p.count == 0) continue;
      r += p.op * Complex(static_cast<double>(p.count) / shots / born(p.op, rho) / 3.0);
    }

    Matrix next = normalized_sandwich(r, rho);
    double next_ll = likelihood_of(projectors, next);
    // Diluted step (I + e R)/(1 + e) when the plain step loses likelihood.
    double step = 1.0;
    for (int h = 0; h < kMaxDilutionHalvings && next_ll < ll - 1e-12 * std::abs(ll); ++h) {
      const Matrix diluted = Matrix::identity(2) + r * Complex(step);
      next = normalized_sandwich(diluted, rho);
      next_ll = likelihood_of(projectors, next);
      step *= 0.5;
    }
    result.iterations = it;
    if (next_ll < ll - 1e-12 * std::abs(ll)) {
      // No ascent direction left at working precision.
      result.converged = true;
      break;
    }

    const double moved = trace_distance(next, rho);
    rho = next;
    ll = next_ll;
    result.log_likelihood.push_back(ll);
    if (moved < tol) {
      result.converged = true;
      break;
    }
  }

  result.state = project_to_state(rho);
  return result;
}

}  // namespace qassist
