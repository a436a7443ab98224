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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qassist/fixtures.hpp"

namespace qassist {

inline constexpr std::string_view kVersion = "1.0.0";

enum class Experiment { Pure1, Pure2, Werner };
enum class Mode { Analytic, Sampled };
enum class OutputFormat { Csv, Json };

inline constexpr std::int64_t kDefaultShots = 100'000;
inline constexpr std::uint64_t kDefaultSeed = 42;

struct RunConfig {
  Experiment experiment = Experiment::Pure1;
  /// theta in degrees for pure families, p for Werner; sorted ascending before a run.
  std::vector<double> grid;
  Mode mode = Mode::Analytic;
  std::int64_t shots_per_basis = kDefaultShots;
  std::uint64_t seed = kDefaultSeed;
  /// Weight of white noise mixed into the prepared state.
  double epsilon_prep = 0.0;
};

/// One parameter point. "before" is Bob alone; "after" follows Alice's
/// measurement and the classical message. Theory columns use the ideal state;
/// sim columns use the prepared state and, in sampled mode, tomography.
struct ExperimentRow {
  double param = 0.0;
  double cd_before_theory = 0.0;
  double cd_before_sim = 0.0;
  double cd_after_theory = 0.0;
  double cd_after_sim = 0.0;
  double delta_sim = 0.0;
  /// QI relative entropy, Werner runs only.
  std::optional<double> bound_qi;

  friend bool operator==(const ExperimentRow&, const ExperimentRow&) = default;
};

/// "start:stop:step", endpoints inclusive; a point within 1e-9 of stop snaps to it.
std::vector<double> parse_grid(std::string_view spec);
/// "a,b,c"
std::vector<double> parse_points(std::string_view spec);

/// Throws ParameterError for an empty grid, out-of-range parameters or bad shots/epsilon.
void validate_config(const RunConfig& config);

std::vector<ExperimentRow> run_pure_experiment(const RunConfig& config);
std::vector<ExperimentRow> run_werner_experiment(const RunConfig& config);
std::vector<ExperimentRow> run_experiment(const RunConfig& config);

/// Task index of the tomography stream for a given grid point and state slot
/// (0 = Bob alone, 1 = outcome +, 2 = outcome -).
std::uint64_t tomography_stream_seed(std::uint64_t seed, std::size_t grid_index, std::size_t slot);

struct DeviationRow {
  FixtureRow fixture;
  FixtureRow theory;
  double dev_before = 0.0;
  double dev_after = 0.0;
  double dev_delta = 0.0;
};

struct DeviationReport {
  int table_id = 0;
  std::vector<DeviationRow> rows;
  double max_deviation = 0.0;
  double mean_deviation = 0.0;
  /// Parameter of the row holding max_deviation.
  double worst_param = 0.0;
};

/// Analytic rows for the parameter grid of a fixture table.
std::vector<ExperimentRow> theory_rows_for_fixture(int table_id);

/// |fixture - theory| per coherence column. Theory delta is clamped at zero.
/// Throws ParameterError naming any fixture parameter missing from `rows`.
DeviationReport compare_fixtures(int table_id, const std::vector<ExperimentRow>& rows);

// Output. CSV prints 6 significant digits; JSON prints shortest round-trip doubles.

std::string experiment_name(Experiment e);
std::string rows_to_csv(Experiment experiment, const std::vector<ExperimentRow>& rows);
std::string rows_to_json(const RunConfig& config, const std::vector<ExperimentRow>& rows);
std::string deviation_to_csv(const DeviationReport& report);
std::string deviation_to_json(const DeviationReport& report, double tolerance);

/// Parses CSV written by rows_to_csv. Werner files carry no cd_before_sim
/// column; it is recovered as cd_after_sim - delta_sim.
std::vector<ExperimentRow> rows_from_csv(std::string_view text);
std::vector<ExperimentRow> rows_from_json(std::string_view text);

}  // namespace qassist
