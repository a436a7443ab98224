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

#include "qassist/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <tuple>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qassist/coherence.hpp"
#include "qassist/errors.hpp"
#include "qassist/protocol.hpp"
#include "qassist/rng.hpp"
#include "qassist/states.hpp"
#include "qassist/tomography.hpp"

namespace qassist {

namespace {

constexpr double kGridSnap = 1e-9;

double parse_double(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\r')) text.remove_suffix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParameterError("not a number: '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string fmt6(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

double coherence_of(const DensityMatrix& rho) { return rel_entropy_coherence(rho).c_r; }

DensityMatrix tomographed(const DensityMatrix& truth, const RunConfig& config, std::size_t grid_index,
                          std::size_t slot) {
  const TomographyRecord record =
      simulate_counts(truth, config.shots_per_basis, tomography_stream_seed(config.seed, grid_index, slot));
  return reconstruct_mle(record).state;
}

/// Bob's coherence before and after assistance for a prepared state and a fixed Alice basis.
std::pair<double, double> simulated_pair(const DensityMatrix& prepared, const MeasurementBasis& basis,
                                         const RunConfig& config, std::size_t grid_index) {
  const DensityMatrix bob = partial_trace(prepared, Subsystem::B);
  const OutcomeSet outcomes = alice_measure(prepared, basis);
  if (config.mode == Mode::Analytic) {
    return {coherence_of(bob), average_assisted_coherence(outcomes)};
  }
  const double before = coherence_of(tomographed(bob, config, grid_index, 0));
  double after = 0.0;
  for (std::size_t i = 0; i < outcomes.outcomes.size(); ++i) {
    const Outcome& o = outcomes.outcomes[i];
    if (o.null_event) continue;
    after += o.prob * coherence_of(tomographed(o.bob_state, config, grid_index, i + 1));
  }
  return {before, after};
}

std::vector<double> sorted_grid(const RunConfig& config) {
  std::vector<double> grid = config.grid;
  std::sort(grid.begin(), grid.end());
  return grid;
}

ExperimentRow& finish(ExperimentRow& row) {
  row.delta_sim = row.cd_after_sim - row.cd_before_sim;
  return row;
}

const std::vector<std::string>& pure_columns() {
  static const std::vector<std::string> cols{"theta_deg",       "cd_before_theory", "cd_before_sim",
                                             "cd_after_theory", "cd_after_sim",     "delta_sim"};
  return cols;
}

const std::vector<std::string>& werner_columns() {
  static const std::vector<std::string> cols{"p",        "cd_before_theory", "cd_after_theory",
                                             "cd_after_sim", "bound_qi",     "delta_sim"};
  return cols;
}

double column_value(const ExperimentRow& row, std::string_view col) {
  if (col == "theta_deg" || col == "p") return row.param;
  if (col == "cd_before_theory") return row.cd_before_theory;
  if (col == "cd_before_sim") return row.cd_before_sim;
  if (col == "cd_after_theory") return row.cd_after_theory;
  if (col == "cd_after_sim") return row.cd_after_sim;
  if (col == "delta_sim") return row.delta_sim;
  if (col == "bound_qi") return row.bound_qi.value_or(0.0);
  throw ParameterError("unknown column '" + std::string(col) + "'");
}

void set_column(ExperimentRow& row, std::string_view col, double v) {
  if (col == "theta_deg" || col == "p") row.param = v;
  else if (col == "cd_before_theory") row.cd_before_theory = v;
  else if (col == "cd_before_sim") row.cd_before_sim = v;
  else if (col == "cd_after_theory") row.cd_after_theory = v;
  else if (col == "cd_after_sim") row.cd_after_sim = v;
  else if (col == "delta_sim") row.delta_sim = v;
  else if (col == "bound_qi") row.bound_qi = v;
  else throw ParameterError("unknown column '" + std::string(col) + "'");
}

Experiment experiment_from_name(std::string_view name) {
  if (name == "pure1") return Experiment::Pure1;
  if (name == "pure2") return Experiment::Pure2;
  if (name == "werner") return Experiment::Werner;
  throw ParameterError("unknown experiment '" + std::string(name) + "'");
}

}  // namespace

std::vector<double> parse_grid(std::string_view spec) {
  const auto parts = split(spec, ':');
  if (parts.size() != 3) throw ParameterError("grid must be start:stop:step, got '" + std::string(spec) + "'");
  const double start = parse_double(parts[0]);
  const double stop = parse_double(parts[1]);
  const double step = parse_double(parts[2]);
  if (!(step > 0.0)) throw ParameterError("grid step must be positive");
  if (stop < start) throw ParameterError("grid stop precedes start");
  if (stop > start && step > stop - start + kGridSnap) {
    throw ParameterError("grid step exceeds the span start:stop in '" + std::string(spec) +
                         "'; the order is start:stop:step");
  }
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + kGridSnap)) + 1;
  std::vector<double> grid;
  grid.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    double v = start + static_cast<double>(i) * step;
    if (std::abs(v - stop) < kGridSnap) v = stop;
    grid.push_back(v);
  }
  return grid;
}

std::vector<double> parse_points(std::string_view spec) {
  std::vector<double> points;
  for (const auto field : split(spec, ',')) points.push_back(parse_double(field));
  return points;
}

void validate_config(const RunConfig& config) {
  if (config.grid.empty()) throw ParameterError("parameter grid is empty");
  for (const double v : config.grid) {
    if (config.experiment == Experiment::Werner) {
      if (!(v >= 0.0 && v <= 1.0)) throw ParameterError("Werner p must lie in [0, 1]");
    } else if (!(v >= 0.0 && v <= 45.0)) {
      throw ParameterError("theta must lie in [0, 45] degrees");
    }
  }
  if (config.mode == Mode::Sampled && config.shots_per_basis < 1) {
    throw ParameterError("shots must be at least 1 in sampled mode");
  }
  if (!(config.epsilon_prep >= 0.0 && config.epsilon_prep <= 1.0)) {
    throw ParameterError("epsilon-prep must lie in [0, 1]");
  }
}

std::uint64_t tomography_stream_seed(std::uint64_t seed, std::size_t grid_index, std::size_t slot) {
  return derive_stream_seed(seed, slot, grid_index);
}

std::vector<ExperimentRow> run_pure_experiment(const RunConfig& config) {
  if (config.experiment == Experiment::Werner) throw ParameterError("run_pure_experiment needs a pure family");
  validate_config(config);
  const Family family = config.experiment == Experiment::Pure1 ? Family::One : Family::Two;

  std::vector<ExperimentRow> rows;
  const auto grid = sorted_grid(config);
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const StateVector psi = make_pure({family, grid[g]});
    const DensityMatrix ideal = DensityMatrix::projector(psi);
    const MeasurementBasis basis = optimal_basis_pure(psi);

    ExperimentRow row;
    row.param = grid[g];
    row.cd_before_theory = coherence_of(partial_trace(ideal, Subsystem::B));
    row.cd_after_theory = average_assisted_coherence(alice_measure(ideal, basis));
    std::tie(row.cd_before_sim, row.cd_after_sim) =
        simulated_pair(depolarize(ideal, config.epsilon_prep), basis, config, g);
    rows.push_back(finish(row));
  }
  return rows;
}

std::vector<ExperimentRow> run_werner_experiment(const RunConfig& config) {
  if (config.experiment != Experiment::Werner) throw ParameterError("run_werner_experiment needs werner");
  validate_config(config);

  std::vector<ExperimentRow> rows;
  const auto grid = sorted_grid(config);
  const MeasurementBasis basis = MeasurementBasis::y();
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const DensityMatrix ideal = make_werner({grid[g]});

    ExperimentRow row;
    row.param = grid[g];
    row.cd_before_theory = coherence_of(partial_trace(ideal, Subsystem::B));
    row.cd_after_theory = average_assisted_coherence(alice_measure(ideal, basis));
    row.bound_qi = qi_relative_entropy(ideal);
    std::tie(row.cd_before_sim, row.cd_after_sim) =
        simulated_pair(depolarize(ideal, config.epsilon_prep), basis, config, g);
    rows.push_back(finish(row));
  }
  return rows;
}

std::vector<ExperimentRow> run_experiment(const RunConfig& config) {
  return config.experiment == Experiment::Werner ? run_werner_experiment(config) : run_pure_experiment(config);
}

std::vector<ExperimentRow> theory_rows_for_fixture(int table_id) {
  const FixtureTable table = load_fixture(table_id);
  RunConfig config;
  config.experiment = table_id == 1 ? Experiment::Pure1 : table_id == 2 ? Experiment::Pure2 : Experiment::Werner;
  for (const auto& r : table.rows) config.grid.push_back(r.param);
  return run_experiment(config);
}

DeviationReport compare_fixtures(int table_id, const std::vector<ExperimentRow>& rows) {
  const FixtureTable table = load_fixture(table_id);
  DeviationReport report;
  report.table_id = table_id;

  std::string missing;
  double sum = 0.0;
  for (const FixtureRow& f : table.rows) {
    const auto it = std::find_if(rows.begin(), rows.end(),
                                 [&](const ExperimentRow& r) { return std::abs(r.param - f.param) <= kGridSnap; });
    if (it == rows.end()) {
      missing += (missing.empty() ? "" : ", ") + fmt6(f.param);
      continue;
    }
    DeviationRow d;
    d.fixture = f;
    d.theory = {f.param, it->cd_before_theory, it->cd_after_theory,
                std::max(0.0, it->cd_after_theory - it->cd_before_theory)};
    d.dev_before = std::abs(f.cd_before - d.theory.cd_before);
    d.dev_after = std::abs(f.cd_after - d.theory.cd_after);
    d.dev_delta = std::abs(f.delta - d.theory.delta);
    for (const double dev : {d.dev_before, d.dev_after, d.dev_delta}) {
      sum += dev;
      if (dev > report.max_deviation) {
        report.max_deviation = dev;
        report.worst_param = f.param;
      }
    }
    report.rows.push_back(d);
  }
  if (!missing.empty()) throw ParameterError("rows do not cover fixture parameters: " + missing);
  report.mean_deviation = sum / static_cast<double>(3 * report.rows.size());
  return report;
}

std::string experiment_name(Experiment e) {
  switch (e) {
    case Experiment::Pure1: return "pure1";
    case Experiment::Pure2: return "pure2";
    case Experiment::Werner: return "werner";
  }
  return "unknown";
}

std::string rows_to_csv(Experiment experiment, const std::vector<ExperimentRow>& rows) {
  const auto& cols = experiment == Experiment::Werner ? werner_columns() : pure_columns();
  std::string out;
  for (std::size_t c = 0; c < cols.size(); ++c) out += (c ? "," : "") + cols[c];
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < cols.size(); ++c) out += (c ? "," : "") + fmt6(column_value(row, cols[c]));
    out += '\n';
  }
  return out;
}

std::vector<ExperimentRow> rows_from_csv(std::string_view text) {
  auto lines = split(text, '\n');
  if (lines.empty() || lines.front().empty()) throw ParameterError("CSV has no header");
  std::vector<std::string> header;
  for (const auto h : split(lines.front(), ',')) header.emplace_back(h);
  const bool werner = header.front() == "p";
  const auto& expected = werner ? werner_columns() : pure_columns();
  if (header != expected) throw ParameterError("CSV header does not match a known schema");

  std::vector<ExperimentRow> rows;
  for (std::size_t l = 1; l < lines.size(); ++l) {
    if (lines[l].empty()) continue;
    const auto fields = split(lines[l], ',');
    if (fields.size() != header.size()) throw ParameterError("CSV row has the wrong number of fields");
    ExperimentRow row;
    for (std::size_t c = 0; c < header.size(); ++c) set_column(row, header[c], parse_double(fields[c]));
    if (werner) row.cd_before_sim = row.cd_after_sim - row.delta_sim;
    rows.push_back(row);
  }
  return rows;
}

std::string rows_to_json(const RunConfig& config, const std::vector<ExperimentRow>& rows) {
  const bool werner = config.experiment == Experiment::Werner;
  nlohmann::json j;
  j["config"] = {{"experiment", experiment_name(config.experiment)},
                 {"mode", config.mode == Mode::Analytic ? "analytic" : "sampled"},
                 {"grid", sorted_grid(config)},
                 {"shots", config.shots_per_basis},
                 {"seed", config.seed},
                 {"epsilon_prep", config.epsilon_prep}};
  j["rows"] = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json r{{werner ? "p" : "theta_deg", row.param},
                     {"cd_before_theory", row.cd_before_theory},
                     {"cd_before_sim", row.cd_before_sim},
                     {"cd_after_theory", row.cd_after_theory},
                     {"cd_after_sim", row.cd_after_sim},
                     {"delta_sim", row.delta_sim}};
    if (row.bound_qi) r["bound_qi"] = *row.bound_qi;
    j["rows"].push_back(r);
  }
  j["meta"] = {{"prng", std::string(kPrngAlgorithm)},
               {"binomial_inversion_limit", kBinomialInversionLimit},
               {"version", std::string(kVersion)}};
  return j.dump(2) + "\n";
}

std::vector<ExperimentRow> rows_from_json(std::string_view text) {
  std::vector<ExperimentRow> rows;
  try {
    const auto j = nlohmann::json::parse(text);
    const Experiment e = experiment_from_name(j.at("config").at("experiment").get<std::string>());
    for (const auto& r : j.at("rows")) {
      ExperimentRow row;
      for (const auto& [key, value] : r.items()) set_column(row, key, value.get<double>());
      if (e == Experiment::Werner && !row.bound_qi) throw ParameterError("Werner row without bound_qi");
      rows.push_back(row);
    }
  } catch (const nlohmann::json::exception& ex) {
    throw ParameterError(std::string("malformed experiment JSON: ") + ex.what());
  }
  return rows;
}

std::string deviation_to_csv(const DeviationReport& report) {
  std::string out =
      std::string(report.table_id == 3 ? "p" : "theta_deg") +
      ",fixture_cd_before,theory_cd_before,dev_cd_before,fixture_cd_after,theory_cd_after,dev_cd_after,"
      "fixture_delta,theory_delta,dev_delta\n";
  for (const auto& d : report.rows) {
    out += fmt6(d.fixture.param);
    for (const double v : {d.fixture.cd_before, d.theory.cd_before, d.dev_before, d.fixture.cd_after,
                           d.theory.cd_after, d.dev_after, d.fixture.delta, d.theory.delta, d.dev_delta}) {
      out += "," + fmt6(v);
    }
    out += '\n';
  }
  return out;
}

std::string deviation_to_json(const DeviationReport& report, double tolerance) {
  nlohmann::json j;
  j["table"] = report.table_id;
  j["fixture_version"] = std::string(kFixtureVersion);
  j["rows"] = nlohmann::json::array();
  for (const auto& d : report.rows) {
    j["rows"].push_back({{"param", d.fixture.param},
                         {"fixture", {d.fixture.cd_before, d.fixture.cd_after, d.fixture.delta}},
                         {"theory", {d.theory.cd_before, d.theory.cd_after, d.theory.delta}},
                         {"deviation", {d.dev_before, d.dev_after, d.dev_delta}}});
  }
  j["summary"] = {{"max_deviation", report.max_deviation},
                  {"mean_deviation", report.mean_deviation},
                  {"worst_param", report.worst_param},
                  {"tolerance", tolerance},
                  {"pass", report.max_deviation <= tolerance}};
  j["meta"] = {{"version", std::string(kVersion)}};
  return j.dump(2) + "\n";
}

}  // namespace qassist
