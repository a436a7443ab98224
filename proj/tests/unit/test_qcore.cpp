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

#include <gtest/gtest.h>

#include "qassist/errors.hpp"
#include "qassist/qcore.hpp"
#include "qassist/rng.hpp"
#include "qassist/states.hpp"
#include "support/oracles.hpp"

namespace qassist {
namespace {

DensityMatrix proj(const StateVector& psi) { return DensityMatrix::projector(psi); }

Matrix diag2(double a, double b) {
  Matrix m(2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

TEST(StateVector, RejectsUnnormalized) {
  EXPECT_THROW((StateVector{1.0, 1.0}), InvalidStateError);
  EXPECT_THROW((StateVector{1.0, 0.0, 0.0}), DimensionError);
  const std::array<Complex, 2> zero{};
  EXPECT_THROW(StateVector::normalized(zero), InvalidStateError);
  const std::array<Complex, 2> raw{3.0, 4.0};
  EXPECT_NEAR(StateVector::normalized(raw)[1].real(), 0.8, 1e-15);
}

TEST(TensorProduct, Examples) {
  const auto half = DensityMatrix::maximally_mixed(2);
  EXPECT_LT(max_abs_diff(tensor_product(half, half).matrix(), DensityMatrix::maximally_mixed(4).matrix()), 1e-15);

  const auto hv = tensor_product(proj(kets::h()), proj(kets::v()));
  Matrix expected(4);
  expected(1, 1) = 1.0;
  EXPECT_LT(max_abs_diff(hv.matrix(), expected), 1e-15);

  const auto a = proj(kets::x_plus());
  const auto b = proj(kets::h());
  const auto ab = tensor_product(a, b);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < 2; ++k)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t l = 0; l < 2; ++l)
          EXPECT_LT(std::abs(ab(2 * i + k, 2 * j + l) - a(i, j) * b(k, l)), 1e-15);

  EXPECT_THROW(tensor_product(ab, a), DimensionError);
}

TEST(PartialTrace, Examples) {
  EXPECT_LT(max_abs_diff(partial_trace(proj(singlet()), Subsystem::B).matrix(), Matrix::identity(2) * 0.5), 1e-15);

  const auto rho_b = partial_trace(proj(make_pure({Family::One, 15.0})), Subsystem::B);
  EXPECT_LT(max_abs_diff(rho_b.matrix(), diag2(0.75, 0.25)), 1e-12);

  EXPECT_THROW(partial_trace(DensityMatrix::maximally_mixed(2), Subsystem::A), DimensionError);
}

TEST(PartialTrace, RecoversProductFactors) {
  CounterRng rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_mixed_state(rng, 2);
    const auto b = random_mixed_state(rng, 2);
    const auto ab = tensor_product(a, b);
    EXPECT_LT(max_abs_diff(partial_trace(ab, Subsystem::A).matrix(), a.matrix()), 1e-12);
    EXPECT_LT(max_abs_diff(partial_trace(ab, Subsystem::B).matrix(), b.matrix()), 1e-12);
  }
}

TEST(Dephase, Examples) {
  EXPECT_LT(max_abs_diff(dephase(proj(kets::x_plus())).matrix(), Matrix::identity(2) * 0.5), 1e-15);

  Matrix expected(4);
  expected(1, 1) = 0.5;
  expected(2, 2) = 0.5;
  EXPECT_LT(max_abs_diff(dephase(proj(singlet()), DephaseScope::BobOnly).matrix(), expected), 1e-15);

  const auto d = DensityMatrix(diag2(0.3, 0.7));
  EXPECT_EQ(dephase(d).matrix(), d.matrix());

  EXPECT_THROW(dephase(d, DephaseScope::BobOnly), DimensionError);
}

TEST(Dephase, IdempotentAndTracePreserving) {
  CounterRng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rho = random_mixed_state(rng, 4);
    for (const auto scope : {DephaseScope::Full, DephaseScope::BobOnly}) {
      const auto once = dephase(rho, scope);
      EXPECT_LT(max_abs_diff(dephase(once, scope).matrix(), once.matrix()), 1e-15);
      EXPECT_NEAR(once.matrix().trace().real(), 1.0, 1e-12);
    }
  }
}

TEST(Entropy, Examples) {
  EXPECT_NEAR(von_neumann_entropy(DensityMatrix::maximally_mixed(2)), 1.0, 1e-12);
  EXPECT_NEAR(von_neumann_entropy(DensityMatrix::maximally_mixed(4)), 2.0, 1e-12);
  EXPECT_NEAR(von_neumann_entropy(proj(singlet())), 0.0, 1e-9);

  const double expected = oracle::shannon({0.625, 0.125, 0.125, 0.125});
  EXPECT_NEAR(von_neumann_entropy(make_werner({0.5})), expected, 1e-12);
  EXPECT_NEAR(von_neumann_entropy(make_werner({0.5})), 1.54879, 5e-6);
}

TEST(Entropy, MatchesEigenOracleAndDephasingIncreasesIt) {
  CounterRng rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto rho = random_mixed_state(rng, trial % 2 == 0 ? 4 : 2);
    const double s = von_neumann_entropy(rho);
    EXPECT_NEAR(s, oracle::entropy(rho.matrix()), 1e-11);
    EXPECT_GE(von_neumann_entropy(dephase(rho)), s - 1e-12);
  }
  for (int trial = 0; trial < 100; ++trial) {
    EXPECT_LE(von_neumann_entropy(proj(random_pure_state(rng, 4))), 1e-9);
  }
}

TEST(Validate, Examples) {
  const auto ok = validate_density(Matrix::identity(2) * 0.5);
  EXPECT_TRUE(ok.ok);
  EXPECT_EQ(ok.hermiticity_defect, 0.0);
  EXPECT_EQ(ok.trace_defect, 0.0);

  const auto short_trace = validate_density(diag2(0.49, 0.49));
  EXPECT_FALSE(short_trace.ok);
  EXPECT_NEAR(short_trace.trace_defect, 0.02, 1e-15);

  const auto negative = validate_density(diag2(1.01, -0.01));
  EXPECT_FALSE(negative.ok);
  EXPECT_NEAR(negative.min_eigenvalue, -0.01, 1e-15);

  EXPECT_THROW(DensityMatrix(diag2(1.01, -0.01)), InvalidStateError);
}

TEST(Entropy, ClipsTinyNegativeEigenvalues) {
  // Accepted by a loose constructor tolerance; the entropy rule then decides.
  EXPECT_NO_THROW(von_neumann_entropy(DensityMatrix(diag2(1.0 + 5e-11, -5e-11), 1e-6)));
  EXPECT_THROW(von_neumann_entropy(DensityMatrix(diag2(1.0 + 1e-8, -1e-8), 1e-6)), InvalidStateError);
}

TEST(Negativity, Examples) {
  EXPECT_NEAR(negativity(make_werner({1.0})), 0.5, 1e-12);
  EXPECT_NEAR(negativity(make_werner({1.0 / 3.0})), 0.0, 1e-10);
  CounterRng rng(9);
  EXPECT_NEAR(negativity(tensor_product(random_mixed_state(rng, 2), random_mixed_state(rng, 2))), 0.0, 1e-12);
  EXPECT_THROW(negativity(DensityMatrix::maximally_mixed(2)), DimensionError);
}

TEST(Negativity, WernerGridAndNonNegative) {
  for (int k = 0; k < 50; ++k) {
    const double p = k / 49.0;
    EXPECT_NEAR(negativity(make_werner({p})), std::max(0.0, (3.0 * p - 1.0) / 4.0), 1e-10) << "p=" << p;
  }
  CounterRng rng(77);
  for (int trial = 0; trial < 200; ++trial) EXPECT_GE(negativity(random_mixed_state(rng, 4)), 0.0);
}

TEST(Fidelity, Examples) {
  CounterRng rng(31);
  const auto rho = random_mixed_state(rng, 2);
  EXPECT_NEAR(fidelity(rho, rho), 1.0, 1e-10);
  EXPECT_NEAR(fidelity(proj(kets::h()), proj(kets::v())), 0.0, 1e-12);
  EXPECT_NEAR(fidelity(proj(kets::h()), DensityMatrix::maximally_mixed(2)), 0.5, 1e-12);
  EXPECT_THROW(fidelity(rho, DensityMatrix::maximally_mixed(4)), DimensionError);
}

TEST(Fidelity, PureArgumentReducesToExpectation) {
  CounterRng rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = trial % 2 == 0 ? 2 : 4;
    const auto psi = random_pure_state(rng, d);
    const auto sigma = random_mixed_state(rng, d);
    EXPECT_NEAR(fidelity(proj(psi), sigma), expectation(sigma, psi), d == 2 ? 1e-8 : 1e-6);
  }
}

TEST(Fidelity, SymmetricOnMixedStates) {
  CounterRng rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = trial % 2 == 0 ? 2 : 4;
    const auto a = random_mixed_state(rng, d);
    const auto b = random_mixed_state(rng, d);
    EXPECT_NEAR(fidelity(a, b), fidelity(b, a), 1e-9);
  }
}

TEST(TraceDistance, OrthogonalAndIdentical) {
  EXPECT_NEAR(trace_distance(proj(kets::h()).matrix(), proj(kets::v()).matrix()), 1.0, 1e-12);
  EXPECT_NEAR(trace_distance(proj(kets::h()).matrix(), proj(kets::h()).matrix()), 0.0, 1e-12);
}

TEST(ProjectToState, ClipsNegativeEigenvalue) {
  const auto rho = project_to_state(diag2(1.2, -0.2));
  EXPECT_LT(max_abs_diff(rho.matrix(), diag2(1.0, 0.0)), 1e-12);
}

}  // namespace
}  // namespace qassist
