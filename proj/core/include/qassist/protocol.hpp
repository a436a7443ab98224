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

#include <vector>

#include "qassist/qcore.hpp"
#include "qassist/sphere_search.hpp"

namespace qassist {

enum class OutcomeLabel { Plus, Minus };

/// Orthonormal single-qubit basis {|eta+>, |eta->} with Bloch vectors +n and -n.
///
/// Phase convention: |eta+> = cos(t/2)|H> + e^{i f} sin(t/2)|V>, where (t, f)
/// are the polar and azimuthal angles of n.
class MeasurementBasis {
 public:
  /// Requires a unit vector (within 1e-10).
  static MeasurementBasis from_bloch(const Vec3& n);
  /// Normalizes any nonzero vector.
  static MeasurementBasis from_direction(const Vec3& n);
  static MeasurementBasis from_angles(double polar, double azimuth);

  static MeasurementBasis x() { return from_bloch({1.0, 0.0, 0.0}); }
  static MeasurementBasis y() { return from_bloch({0.0, 1.0, 0.0}); }
  static MeasurementBasis z() { return from_bloch({0.0, 0.0, 1.0}); }

  const Vec3& bloch() const { return n_; }
  double polar() const;
  double azimuth() const;
  MeasurementBasis flipped() const { return MeasurementBasis(Vec3{-n_[0], -n_[1], -n_[2]}); }

  StateVector state(OutcomeLabel label) const;
  /// (I +/- n.sigma) / 2
  Matrix projector(OutcomeLabel label) const;

 private:
  explicit MeasurementBasis(const Vec3& n) : n_(n) {}
  Vec3 n_{0.0, 0.0, 1.0};
};

struct Outcome {
  OutcomeLabel label = OutcomeLabel::Plus;
  double prob = 0.0;
  DensityMatrix bob_state = DensityMatrix::maximally_mixed(2);
  /// Set when the outcome has zero probability; bob_state is then I/2.
  bool null_event = false;
};

struct OutcomeSet {
  std::vector<Outcome> outcomes;
};

/// Probabilities below this are treated as impossible outcomes.
inline constexpr double kNullOutcomeProbability = 1e-15;

/// Alice measures her qubit in `basis`; returns Bob's conditional states.
OutcomeSet alice_measure(const DensityMatrix& rho_ab, const MeasurementBasis& basis);

/// sum_i p_i C_r(bob_state_i)
double average_assisted_coherence(const OutcomeSet& outcomes);

/// Alice basis mutually unbiased with every conditional Alice state <k|_B |psi>.
MeasurementBasis optimal_basis_pure(const StateVector& psi_ab);

struct BasisOptimum {
  MeasurementBasis basis = MeasurementBasis::z();
  double value = 0.0;
  std::vector<SpherePoint> trace;
  double grid_step = 0.0;
};

inline constexpr int kDefaultGridRes = 64;
inline constexpr int kDefaultRefineIters = 30;

/// Maximizes average_assisted_coherence over all projective Alice bases.
BasisOptimum optimize_basis(const DensityMatrix& rho_ab, int grid_res = kDefaultGridRes,
                            int refine_iters = kDefaultRefineIters);

}  // namespace qassist
