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

// Analytic curves for the state families, in bits. Angles in degrees.

namespace qassist::closed_form {

/// -x log2 x - (1-x) log2 (1-x), with 0 log 0 = 0.
double binary_entropy(double x);

/// Entropy of Bob's marginal for Family One; also its assisted coherence.
double family1_bob_entropy(double theta_deg);

/// C_r of Bob's marginal for Family Two.
double family2_bob_coherence(double theta_deg);

/// Werner state measured in any equatorial basis: coherence of either conditional state.
double werner_assisted_coherence(double p);

/// QI relative entropy of a Werner state.
double werner_qi_bound(double p);

/// Smallest partial-transpose eigenvalue clipped at zero, i.e. negativity of a Werner state.
double werner_negativity(double p);

}  // namespace qassist::closed_form
