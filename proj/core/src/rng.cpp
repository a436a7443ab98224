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

#include "qassist/rng.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "qassist/errors.hpp"

namespace qassist {

namespace {

constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

Complex complex_normal(CounterRng& rng) {
  const double re = rng.next_normal();
  const double im = rng.next_normal();
  return {re, im};
}

std::int64_t binomial_by_inversion(CounterRng& rng, std::int64_t n, double p) {
  const double u = rng.next_uniform();
  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  const double log_n_fact = std::lgamma(static_cast<double>(n) + 1.0);
  double cdf = 0.0;
  for (std::int64_t k = 0; k < n; ++k) {
    const auto kd = static_cast<double>(k);
    const double log_pmf = log_n_fact - std::lgamma(kd + 1.0) -
                           std::lgamma(static_cast<double>(n - k) + 1.0) + kd * log_p +
                           static_cast<double>(n - k) * log_q;
    cdf += std::exp(log_pmf);
    if (u < cdf) return k;
  }
  return n;
}

std::int64_t binomial_by_normal(CounterRng& rng, std::int64_t n, double p) {
  const auto nd = static_cast<double>(n);
  const double mean = nd * p;
  const double sd = std::sqrt(nd * p * (1.0 - p));
  const double draw = std::floor(mean + sd * rng.next_normal() + 0.5);
  return static_cast<std::int64_t>(std::clamp(draw, 0.0, nd));
}

}  // namespace

std::uint64_t CounterRng::mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t CounterRng::next_u64() {
  ++counter_;
  return mix(seed_ + counter_ * kGoldenGamma);
}

double CounterRng::next_uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double CounterRng::next_normal() {
  // 1 - u keeps the log argument in (0, 1].
  const double u1 = 1.0 - next_uniform();
  const double u2 = next_uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t stream_hash(std::uint64_t a, std::uint64_t b) {
  return CounterRng::mix(CounterRng::mix(a + kGoldenGamma) ^ (b * 0xD1B54A32D192ED03ULL));
}

std::int64_t sample_binomial(CounterRng& rng, std::int64_t trials, double prob) {
  if (trials < 0) throw ParameterError("binomial trial count must be non-negative");
  if (!(prob >= -1e-12 && prob <= 1.0 + 1e-12)) throw ParameterError("binomial probability outside [0, 1]");
  // Snap near-deterministic outcomes so exact eigenstates give exact counts.
  if (prob <= 1e-12) return 0;
  if (prob >= 1.0 - 1e-12) return trials;
  if (trials <= kBinomialInversionLimit) return binomial_by_inversion(rng, trials, prob);
  return binomial_by_normal(rng, trials, prob);
}

StateVector random_pure_state(CounterRng& rng, std::size_t dim) {
  std::array<Complex, kMaxDim> amps{};
  for (std::size_t i = 0; i < dim; ++i) amps[i] = complex_normal(rng);
  return StateVector::normalized(std::span<const Complex>(amps.data(), dim));
}

DensityMatrix random_mixed_state(CounterRng& rng, std::size_t dim) {
  Matrix g(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) g(i, j) = complex_normal(rng);
  }
  Matrix w = g * g.adjoint();
  const double tr = w.trace().real();
  return DensityMatrix(w * Complex(1.0 / tr));
}

MeasurementBasis random_basis(CounterRng& rng) {
  return MeasurementBasis::from_direction({rng.next_normal(), rng.next_normal(), rng.next_normal()});
}

}  // namespace qassist
