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

#include <cstdint>
#include <string_view>

#include "qassist/protocol.hpp"
#include "qassist/qcore.hpp"

namespace qassist {

/// Identifier recorded in output metadata so golden values can be traced to a generator.
inline constexpr std::string_view kPrngAlgorithm = "splitmix64-ctr/v1";

/// Binomial draws with n <= this use exact CDF inversion; larger n use a
/// continuity-corrected normal approximation.
inline constexpr std::int64_t kBinomialInversionLimit = 10'000;

/// Counter-based 64-bit generator: output k is the SplitMix64 finalizer applied
/// to seed + k * golden_gamma. Any output is addressable without stepping.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t counter() const { return counter_; }

  std::uint64_t next_u64();
  /// Uniform on [0, 1) with 53 random bits.
  double next_uniform();
  /// Standard normal by Box-Muller; consumes two outputs per call.
  double next_normal();

  static std::uint64_t mix(std::uint64_t z);

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

/// Stable 64-bit hash of an index pair, used to derive independent streams.
std::uint64_t stream_hash(std::uint64_t a, std::uint64_t b);

/// Seed for task (a, b): seed XOR stream_hash(a, b).
inline std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return seed ^ stream_hash(a, b);
}

std::int64_t sample_binomial(CounterRng& rng, std::int64_t trials, double prob);

// Random states for property checks and benchmarks.

/// Normalized complex-Gaussian amplitudes.
StateVector random_pure_state(CounterRng& rng, std::size_t dim);
/// G G^dagger / tr with G a complex-Gaussian dim x dim matrix.
DensityMatrix random_mixed_state(CounterRng& rng, std::size_t dim);
/// Uniform direction on the sphere.
MeasurementBasis random_basis(CounterRng& rng);

}  // namespace qassist
