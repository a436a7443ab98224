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

#include "qassist/coherence.hpp"

#include "qassist/errors.hpp"

namespace qassist {

CoherenceReport rel_entropy_coherence(const DensityMatrix& rho) {
  CoherenceReport report;
  report.entropy_dephased = von_neumann_entropy(dephase(rho, DephaseScope::Full));
  report.entropy_state = von_neumann_entropy(rho);
  report.c_r = report.entropy_dephased - report.entropy_state;
  return report;
}

double qi_relative_entropy(const DensityMatrix& rho_ab) {
  if (rho_ab.dim() != 4) throw DimensionError("qi_relative_entropy needs a two-qubit state");
  return von_neumann_entropy(dephase(rho_ab, DephaseScope::BobOnly)) - von_neumann_entropy(rho_ab);
}

double coa_closed_form(const DensityMatrix& rho_b) {
  if (rho_b.dim() != 2) throw DimensionError("coa_closed_form needs a qubit state");
  return von_neumann_entropy(dephase(rho_b, DephaseScope::Full));
}

CoaResult coa_numeric(const StateVector& psi_ab, int grid_res, int refine_iters) {
  if (psi_ab.dim() != 4) throw DimensionError("coa_numeric needs a two-qubit state vector");
  BasisOptimum opt = optimize_basis(DensityMatrix::projector(psi_ab), grid_res, refine_iters);
  return {opt.value, opt.basis, std::move(opt.trace)};
}

}  // namespace qassist
