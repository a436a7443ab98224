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

#include "qassist/sphere_search.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qassist/errors.hpp"

namespace qassist {

namespace {

constexpr double kInvPhi = 0.61803398874989484820;  // 1 / golden ratio
constexpr int kLineIterations = 40;

}  // namespace

std::pair<double, double> golden_section_maximize(const std::function<double(double)>& f, double lo,
                                                  double hi, int iterations) {
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < iterations; ++i) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return fc >= fd ? std::pair{c, fc} : std::pair{d, fd};
}

SphereSearchResult maximize_on_hemisphere(const std::function<double(double, double)>& f,
                                          int grid_res, int refine_iters) {
  if (grid_res < 8) throw ParameterError("grid resolution must be at least 8, got " + std::to_string(grid_res));
  if (refine_iters < 0) throw ParameterError("refinement iterations must be non-negative");

  SphereSearchResult result;
  const double polar_step = (std::numbers::pi / 2.0) / static_cast<double>(grid_res - 1);
  const double azimuth_step = 2.0 * std::numbers::pi / static_cast<double>(grid_res);
  result.grid_step = polar_step;

  auto eval = [&](double polar, double azimuth) {
    ++result.evaluations;
    return f(polar, azimuth);
  };

  bool have_best = false;
  for (int i = 0; i < grid_res; ++i) {
    const double polar = polar_step * i;
    for (int j = 0; j < grid_res; ++j) {
      const double azimuth = azimuth_step * j;
      const double value = eval(polar, azimuth);
      if (!have_best || value > result.best.value + kSearchTieMargin) {
        result.best = {polar, azimuth, value};
        have_best = true;
      }
    }
  }
  result.trace.push_back(result.best);

  double polar_width = polar_step;
  double azimuth_width = azimuth_step;
  for (int iter = 0; iter < refine_iters; ++iter) {
    const SpherePoint start = result.best;

    auto [polar, polar_value] = golden_section_maximize(
        [&](double t) { return eval(t, result.best.azimuth); }, result.best.polar - polar_width,
        result.best.polar + polar_width, kLineIterations);
    if (polar_value > result.best.value) {
      result.best = {polar, result.best.azimuth, polar_value};
      result.trace.push_back(result.best);
    }

    auto [azimuth, azimuth_value] = golden_section_maximize(
        [&](double t) { return eval(result.best.polar, t); }, result.best.azimuth - azimuth_width,
        result.best.azimuth + azimuth_width, kLineIterations);
    if (azimuth_value > result.best.value) {
      result.best = {result.best.polar, azimuth, azimuth_value};
      result.trace.push_back(result.best);
    }

    // Keep the bracket wide while the incumbent is still moving.
    const bool moved = result.best.polar != start.polar || result.best.azimuth != start.azimuth;
    if (!moved) {
      polar_width *= kInvPhi;
      azimuth_width *= kInvPhi;
    }
  }
  return result;
}

}  // namespace qassist
