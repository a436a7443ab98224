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

#include <functional>
#include <vector>

namespace qassist {

struct SpherePoint {
  double polar = 0.0;    // radians
  double azimuth = 0.0;  // radians
  double value = 0.0;
};

struct SphereSearchResult {
  SpherePoint best;
  /// Grid winner followed by every point accepted during refinement.
  std::vector<SpherePoint> trace;
  /// Polar spacing of the coarse grid; the angular resolution before refinement.
  double grid_step = 0.0;
  long evaluations = 0;
};

/// Values within this margin of the incumbent count as ties.
inline constexpr double kSearchTieMargin = 1e-12;

/// Maximizes f(polar, azimuth) over directions on the upper hemisphere.
///
/// A grid_res x grid_res grid (polar in [0, pi/2] with both ends included,
/// azimuth in [0, 2 pi)) is scanned in lexicographic order; ties keep the
/// earliest point. Then `refine_iters` rounds of coordinate-wise golden-section
/// search run around the incumbent, each round shrinking the bracket half-widths
/// by the golden ratio. Antipodal directions must give equal values.
SphereSearchResult maximize_on_hemisphere(const std::function<double(double, double)>& f,
                                          int grid_res, int refine_iters);

/// Golden-section maximization of a unimodal f on [lo, hi]. Returns the best evaluated point.
std::pair<double, double> golden_section_maximize(const std::function<double(double)>& f, double lo,
                                                  double hi, int iterations);

}  // namespace qassist
