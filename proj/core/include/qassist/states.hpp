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

#include <cstddef>

#include "qassist/qcore.hpp"

namespace qassist {

enum class Family { One, Two };

/// A pure two-qubit family member with angle `theta_deg` in [0, 45] degrees.
///
/// Family One is cos 2t |HH> + sin 2t |VV>; Family Two is
/// (cos 2t |HH> + cos 2t |HV> + sin 2t |VH> - sin 2t |VV>) / sqrt(2).
struct PureFamily {
  Family family = Family::One;
  double theta_deg = 0.0;
};

struct WernerParam {
  double p = 0.0;
};

StateVector make_pure(const PureFamily& spec);
DensityMatrix make_werner(const WernerParam& w);
StateVector maximally_coherent(std::size_t dim);

/// (|HV> - |VH>) / sqrt(2)
StateVector singlet();

/// (1 - epsilon) rho + epsilon I/d, epsilon in [0, 1].
DensityMatrix depolarize(const DensityMatrix& rho, double epsilon);

namespace kets {
StateVector h();
StateVector v();
StateVector x_plus();
StateVector x_minus();
StateVector y_plus();
StateVector y_minus();
}  // namespace kets

}  // namespace qassist
