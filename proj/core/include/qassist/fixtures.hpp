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

#include <cstdint>
#include <string_view>
#include <vector>

namespace qassist {

/// Version tag of the embedded experimental tables.
inline constexpr std::string_view kFixtureVersion = "tables-v1";

struct FixtureRow {
  double param = 0.0;      // theta in degrees (tables 1, 2) or Werner p (table 3)
  double cd_before = 0.0;  // Bob's coherence without assistance
  double cd_after = 0.0;   // Bob's coherence after assistance
  double delta = 0.0;      // reported increase, kept verbatim (may be negative)
};

/// Measured coherences for one state family.
///
/// Table 1: cos 2t|HH> + sin 2t|VV>, t = 0:2.5:45 degrees (19 rows).
/// Table 2: the second pure family on the same grid (19 rows).
/// Table 3: Werner states at 16 values of p.
struct FixtureTable {
  int table_id = 0;
  std::vector<FixtureRow> rows;
};

/// Raw embedded CSV for a table (1..3).
std::string_view fixture_csv(int table_id);

/// FNV-1a 64-bit hash.
std::uint64_t fnv1a64(std::string_view bytes);

/// Parses the embedded CSV after checking its checksum; throws Error on mismatch.
FixtureTable load_fixture(int table_id);

}  // namespace qassist
