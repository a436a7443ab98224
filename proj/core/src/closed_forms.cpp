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

#include "qassist/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qassist::closed_form {

namespace {

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

double radians(double deg) { return deg * std::numbers::pi / 180.0; }

}  // namespace

double binary_entropy(double x) { return -xlog2x(x) - xlog2x(1.0 - x); }

double family1_bob_entropy(double theta_deg) {
  const double c = std::cos(radians(2.0 * theta_deg));
  const double s = std::sin(radians(2.0 * theta_deg));
  return -xlog2x(c * c) - xlog2x(s * s);
}

double family2_bob_coherence(double theta_deg) {
  const double c4 = std::cos(radians(4.0 * theta_deg));
  return 0.5 * (xlog2x(1.0 + c4) + xlog2x(1.0 - c4));
}

double werner_assisted_coherence(double p) { return 0.5 * (xlog2x(1.0 + p) + xlog2x(1.0 - p)); }

double werner_qi_bound(double p) {
  return 0.25 * (xlog2x(1.0 - p) + xlog2x(1.0 + 3.0 * p) - 2.0 * xlog2x(1.0 + p));
}

double werner_negativity(double p) { return std::max(0.0, (3.0 * p - 1.0) / 4.0); }

}  // namespace qassist::closed_form
