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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "qassist/errors.hpp"
#include "qassist/protocol.hpp"
#include "qassist/rng.hpp"
#include "qassist/states.hpp"
#include "qassist/tomography.hpp"

namespace qassist {
namespace {

DensityMatrix proj(const StateVector& psi) { return DensityMatrix::projector(psi); }

TEST(CounterRng, FirstOutputIsReferenceSplitMix64) {
  // Published SplitMix64 output for state 0.
  CounterRng zero(0);
  EXPECT_EQ(zero.next_u64(), 0xE220A8397B1DCDAFull);

  CounterRng rng(42);
  EXPECT_EQ(rng.next_u64(), 13679457532755275413ull);
  EXPECT_EQ(rng.next_u64(), 2949826092126892291ull);
  EXPECT_EQ(rng.next_u64(), 5139283748462763858ull);
  EXPECT_EQ(rng.counter(), 3u);
}

TEST(CounterRng, UniformRangeAndMoments) {
  CounterRng rng(1);
  double sum = 0.0;
  double sum_sq = 0.0;
  constexpr int kN = 200000;
  for (int i = 0; i < kN; ++i) {
    const double u = rng.next_uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
    const double z = rng.next_normal();
    sum_sq += z * z;
  }
  EXPECT_NEAR(sum / kN, 0.5, 5 * std::sqrt(1.0 / 12 / kN));
  EXPECT_NEAR(sum_sq / kN, 1.0, 5 * std::sqrt(2.0 / kN));
}

TEST(StreamSeed, DistinctPerTask) {
  EXPECT_NE(derive_stream_seed(42, 0, 0), derive_stream_seed(42, 1, 0));
  EXPECT_NE(derive_stream_seed(42, 0, 1), derive_stream_seed(42, 1, 0));
  EXPECT_EQ(derive_stream_seed(42, 2, 7), 42 ^ stream_hash(2, 7));
}

TEST(Binomial, MomentsOnBothSidesOfTheInversionLimit) {
  CounterRng rng(9);
  for (const std::int64_t n : {std::int64_t{20}, std::int64_t{5000}, std::int64_t{200000}}) {
    const double p = 0.3;
    constexpr int kDraws = 4000;
    double sum = 0.0;
    for (int i = 0; i < kDraws; ++i) {
      const auto k = sample_binomial(rng, n, p);
      ASSERT_GE(k, 0);
      ASSERT_LE(k, n);
      sum += static_cast<double>(k);
    }
    const double sd = std::sqrt(n * p * (1 - p) / kDraws);
    EXPECT_NEAR(sum / kDraws, n * p, 5 * sd) << "n=" << n;
  }
  EXPECT_EQ(sample_binomial(rng, 100, 0.0), 0);
  EXPECT_EQ(sample_binomial(rng, 100, 1.0), 100);
  EXPECT_THROW(sample_binomial(rng, 100, 1.5), ParameterError);
}

TEST(SimulateCounts, DeterministicOutcomes) {
  const auto h = simulate_counts(proj(kets::h()), 1000, 3);
  EXPECT_EQ(h[PauliAxis::Z].plus, 1000);
  const auto y = simulate_counts(proj(kets::y_plus()), 1000, 3);
  EXPECT_EQ(y[PauliAxis::Y].plus, 1000);
  EXPECT_THROW(simulate_counts(proj(kets::h()), 0, 3), ParameterError);
  EXPECT_THROW(simulate_counts(DensityMatrix::maximally_mixed(4), 10, 3), DimensionError);
}

TEST(SimulateCounts, GoldenValuesForMaximallyMixedQubit) {
  const auto rec = simulate_counts(DensityMatrix::maximally_mixed(2), 1'000'000, 12345);
  EXPECT_EQ(rec[PauliAxis::X], (BasisCounts{499296, 500704}));
  EXPECT_EQ(rec[PauliAxis::Y], (BasisCounts{500347, 499653}));
  EXPECT_EQ(rec[PauliAxis::Z], (BasisCounts{500314, 499686}));
  for (const auto& c : rec.counts) EXPECT_LE(std::abs(c.plus - 500000), 1500);

  const auto small = simulate_counts(DensityMatrix::maximally_mixed(2), 1000, 12345);
  EXPECT_EQ(small[PauliAxis::X], (BasisCounts{505, 495}));
  EXPECT_EQ(small[PauliAxis::Y], (BasisCounts{502, 498}));
  EXPECT_EQ(small[PauliAxis::Z], (BasisCounts{498, 502}));
}

TEST(SimulateCounts, IdenticalInputsGiveIdenticalRecords) {
  CounterRng rng(4);
  const auto rho = random_mixed_state(rng, 2);
  EXPECT_EQ(simulate_counts(rho, 12345, 99), simulate_counts(rho, 12345, 99));
  EXPECT_NE(simulate_counts(rho, 12345, 99), simulate_counts(rho, 12345, 100));
}

TEST(RecordJson, RoundTripAndSchema) {
  const auto rec = simulate_counts(proj(kets::x_plus()), 500, 18446744073709551615ull);
  const std::string text = record_to_json(rec);
  EXPECT_NE(text.find("\"counts\""), std::string::npos);
  EXPECT_NE(text.find("\"shots\""), std::string::npos);
  EXPECT_EQ(record_from_json(text), rec);

  EXPECT_THROW(record_from_json("{\"seed\":1,\"shots\":10,\"counts\":{\"X\":[5,5],\"Y\":[5,5],\"Z\":[5,6]}}"),
               ParameterError);
  EXPECT_THROW(record_from_json("not json"), ParameterError);
}

TEST(ReconstructLinear, Examples) {
  const auto h = reconstruct_linear(expected_counts(proj(kets::h()), 1000));
  EXPECT_LT(max_abs_diff(h.state.matrix(), proj(kets::h()).matrix()), 1e-12);

  const auto mixed = reconstruct_from_stokes({0.0, 0.0, 0.0});
  EXPECT_LT(max_abs_diff(mixed.state.matrix(), Matrix::identity(2) * 0.5), 1e-15);

  // Unphysical Stokes vector: clip the 2x2 candidate's spectrum to {1, 0}.
  const auto clipped = reconstruct_from_stokes({0.8, 0.8, 0.8});
  const double inv = 1.0 / std::sqrt(3.0);
  const Matrix expected = bloch_operator({inv, inv, inv});
  EXPECT_LT(max_abs_diff(clipped.state.matrix(), expected), 1e-12);
  EXPECT_TRUE(clipped.regularized);
}

TEST(ReconstructMle, FixedPointForMaximallyMixed) {
  const auto r = reconstruct_mle(expected_counts(DensityMatrix::maximally_mixed(2), 1000));
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.iterations, 1);
  EXPECT_LT(max_abs_diff(r.state.matrix(), Matrix::identity(2) * 0.5), 1e-12);
}

TEST(ReconstructMle, PureStateLimit) {
  const auto rec = expected_counts(proj(kets::h()), 10000);
  ASSERT_EQ(rec[PauliAxis::Z].minus, 0);
  const auto r = reconstruct_mle(rec);
  EXPECT_GE(fidelity(r.state, proj(kets::h())), 1.0 - 1e-6);
}

TEST(ReconstructMle, Family1ConditionalStateAtTenDegrees) {
  const auto set = alice_measure(proj(make_pure({Family::One, 10.0})), MeasurementBasis::y());
  const auto& truth = set.outcomes.front().bob_state;
  const auto r = reconstruct_mle(simulate_counts(truth, 1'000'000, 42));
  EXPECT_GE(fidelity(r.state, truth), 0.999);
}

TEST(ReconstructMle, LikelihoodNonDecreasingAndValid) {
  CounterRng rng(600);
  for (int trial = 0; trial < 40; ++trial) {
    const auto truth = trial % 2 == 0 ? random_mixed_state(rng, 2) : proj(random_pure_state(rng, 2));
    const auto rec = simulate_counts(truth, trial % 3 == 0 ? 50 : 5000, 1000 + trial);
    const auto mle = reconstruct_mle(rec);
    for (std::size_t i = 1; i < mle.log_likelihood.size(); ++i) {
      EXPECT_GE(mle.log_likelihood[i], mle.log_likelihood[i - 1] - 1e-9 * std::abs(mle.log_likelihood[i - 1]));
    }
    EXPECT_TRUE(validate_density(mle.state.matrix()).ok);
    EXPECT_TRUE(validate_density(reconstruct_linear(rec).state.matrix()).ok);
    EXPECT_GE(log_likelihood(rec, mle.state), log_likelihood(rec, DensityMatrix::maximally_mixed(2)) - 1e-9);
  }
}

TEST(ReconstructMle, ConsistencyAsShotsGrow) {
  CounterRng rng(777);
  for (int trial = 0; trial < 20; ++trial) {
    const auto truth = random_mixed_state(rng, 2);
    double previous = 0.0;
    for (const std::int64_t shots : {std::int64_t{1000}, std::int64_t{100000}, std::int64_t{10000000}}) {
      const double f = fidelity(reconstruct_mle(simulate_counts(truth, shots, 5)).state, truth);
      EXPECT_GE(f, previous) << "trial " << trial << " shots " << shots;
      previous = f;
    }
    EXPECT_GE(previous, 0.999);
  }
}

TEST(ReconstructMle, DeterministicForIdenticalRecords) {
  const auto rec = simulate_counts(proj(kets::x_minus()), 2000, 8);
  const auto a = reconstruct_mle(rec);
  const auto b = reconstruct_mle(rec);
  EXPECT_EQ(a.state.matrix(), b.state.matrix());
  EXPECT_EQ(a.log_likelihood, b.log_likelihood);
}

}  // namespace
}  // namespace qassist
