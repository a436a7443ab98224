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

#include "qassist/protocol.hpp"
#include "qassist/qcore.hpp"

namespace qassist {

/// Relative entropy of coherence in the {|H>, |V>} basis, in bits.
struct CoherenceReport {
  double c_r = 0.0;
  double entropy_dephased = 0.0;
  double entropy_state = 0.0;
};

/// C_r = S(Delta(rho)) - S(rho). Equals the distillable coherence under incoherent operations.
CoherenceReport rel_entropy_coherence(const DensityMatrix& rho);

/// S(Delta^B(rho)) - S(rho) for a two-qubit state; upper bound on assisted distillation.
double qi_relative_entropy(const DensityMatrix& rho_ab);

/// Coherence of assistance of a qubit: S(Delta(rho)).
double coa_closed_form(const DensityMatrix& rho_b);

struct CoaResult {
  double value = 0.0;
  MeasurementBasis argmax_basis = MeasurementBasis::z();
  std::vector<SpherePoint> optimizer_trace;
};

/// Coherence of assistance of Bob's marginal, found by searching Alice's bases directly.
CoaResult coa_numeric(const StateVector& psi_ab, int grid_res = kDefaultGridRes,
                      int refine_iters = kDefaultRefineIters);

}  // namespace qassist
