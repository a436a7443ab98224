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

// qassist: regenerate assisted-coherence curves, run the sampled tomography
// pipeline, and score the embedded experimental tables.
//
// Exit codes: 0 success, 1 fixture deviation above tolerance or runtime
// failure, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qassist/coherence.hpp"
#include "qassist/errors.hpp"
#include "qassist/harness.hpp"
#include "qassist/protocol.hpp"
#include "qassist/rng.hpp"
#include "qassist/states.hpp"
#include "qassist/tomography.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
  std::string grid;
  std::string points;
  std::string mode = "analytic";
  std::int64_t shots = qassist::kDefaultShots;
  std::uint64_t seed = qassist::kDefaultSeed;
  double epsilon_prep = 0.0;
  std::string format = "csv";
  std::string out;
};

void add_output_flags(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", opt.out, "Output path (default stdout)");
}

void add_run_flags(CLI::App* cmd, CommonOptions& opt, const std::string& default_grid) {
  opt.grid = default_grid;
  auto* grid = cmd->add_option("--grid", opt.grid, "Parameter grid start:stop:step")->capture_default_str();
  auto* points = cmd->add_option("--points", opt.points, "Comma-separated parameter values");
  grid->excludes(points);
  points->excludes(grid);
  cmd->add_option("--mode", opt.mode, "analytic or sampled")
      ->check(CLI::IsMember({"analytic", "sampled"}))
      ->capture_default_str();
  cmd->add_option("--shots", opt.shots, "Shots per tomography basis")->capture_default_str();
  cmd->add_option("--seed", opt.seed, "PRNG seed")->capture_default_str();
  cmd->add_option("--epsilon-prep", opt.epsilon_prep, "White-noise weight in state preparation")
      ->capture_default_str();
  add_output_flags(cmd, opt);
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
  file << text;
  if (!file) throw std::runtime_error("failed writing '" + path + "'");
}

qassist::RunConfig build_config(qassist::Experiment experiment, const CommonOptions& opt) {
  qassist::RunConfig config;
  config.experiment = experiment;
  config.grid = opt.points.empty() ? qassist::parse_grid(opt.grid) : qassist::parse_points(opt.points);
  config.mode = opt.mode == "sampled" ? qassist::Mode::Sampled : qassist::Mode::Analytic;
  config.shots_per_basis = opt.shots;
  config.seed = opt.seed;
  config.epsilon_prep = opt.epsilon_prep;
  qassist::validate_config(config);
  return config;
}

int run_experiment_command(qassist::Experiment experiment, const CommonOptions& opt) {
  const qassist::RunConfig config = build_config(experiment, opt);
  const auto rows = qassist::run_experiment(config);
  emit(opt.format == "json" ? qassist::rows_to_json(config, rows) : qassist::rows_to_csv(experiment, rows),
       opt.out);
  return 0;
}

int run_fixtures_command(int table, double tolerance, const CommonOptions& opt) {
  const auto report = qassist::compare_fixtures(table, qassist::theory_rows_for_fixture(table));
  emit(opt.format == "json" ? qassist::deviation_to_json(report, tolerance) : qassist::deviation_to_csv(report),
       opt.out);
  const bool pass = report.max_deviation <= tolerance;
  std::cerr << "table " << table << ": max deviation " << report.max_deviation << " at parameter "
            << report.worst_param << ", mean " << report.mean_deviation << ", tolerance " << tolerance << " -> "
            << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? 0 : kExitFail;
}

nlohmann::json reconstruction_json(const qassist::ReconstructionResult& r,
                                   const std::optional<qassist::DensityMatrix>& truth) {
  const auto& m = r.state.matrix();
  nlohmann::json j{{"method", r.method == qassist::ReconstructionMethod::Mle ? "mle" : "linear"},
                   {"bloch",
                    {2.0 * m(1, 0).real(), 2.0 * m(1, 0).imag(), (m(0, 0) - m(1, 1)).real()}},
                   {"c_r", qassist::rel_entropy_coherence(r.state).c_r},
                   {"iterations", r.iterations},
                   {"converged", r.converged},
                   {"regularized", r.regularized}};
  if (truth) j["fidelity"] = qassist::fidelity(r.state, *truth);
  return j;
}

int run_tomo_demo(double theta, const std::string& input, const CommonOptions& opt) {
  std::optional<qassist::DensityMatrix> truth;
  qassist::TomographyRecord record;
  if (!input.empty()) {
    std::ifstream file(input, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open record file '" + input + "'");
    std::stringstream buffer;
    buffer << file.rdbuf();
    record = qassist::record_from_json(buffer.str());
  } else {
    // Bob's state after Alice finds |y+> on the first pure family.
    const auto psi = qassist::make_pure({qassist::Family::One, theta});
    const auto outcomes =
        qassist::alice_measure(qassist::DensityMatrix::projector(psi), qassist::MeasurementBasis::y());
    truth = outcomes.outcomes.front().bob_state;
    record = qassist::simulate_counts(*truth, opt.shots, opt.seed);
  }
  const auto linear = qassist::reconstruct_linear(record);
  const auto mle = qassist::reconstruct_mle(record);

  if (opt.format == "csv") {
    std::ostringstream out;
    out << "method,c_r,fidelity,iterations,converged\n";
    for (const auto* r : {&linear, &mle}) {
      const auto j = reconstruction_json(*r, truth);
      out << j["method"].get<std::string>() << ',' << j["c_r"].get<double>() << ','
          << (truth ? std::to_string(j["fidelity"].get<double>()) : std::string("nan")) << ',' << r->iterations
          << ',' << (r->converged ? "true" : "false") << '\n';
    }
    emit(out.str(), opt.out);
    return 0;
  }

  nlohmann::json j;
  j["record"] = nlohmann::json::parse(qassist::record_to_json(record));
  if (truth) {
    j["truth"] = {{"theta_deg", theta}, {"c_r", qassist::rel_entropy_coherence(*truth).c_r}};
  }
  j["linear"] = reconstruction_json(linear, truth);
  j["mle"] = reconstruction_json(mle, truth);
  j["meta"] = {{"prng", std::string(qassist::kPrngAlgorithm)}, {"version", std::string(qassist::kVersion)}};
  emit(j.dump(2) + "\n", opt.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Assisted coherence distillation: theory curves, sampled pipeline, fixture scoring"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qassist::kVersion));

  CommonOptions pure1_opt, pure2_opt, werner_opt, fixtures_opt, tomo_opt;
  auto* pure1 = app.add_subcommand("pure1", "cos 2t|HH> + sin 2t|VV> over theta (degrees)");
  add_run_flags(pure1, pure1_opt, "0:45:2.5");
  auto* pure2 = app.add_subcommand("pure2", "Second pure family over theta (degrees)");
  add_run_flags(pure2, pure2_opt, "0:45:2.5");
  auto* werner = app.add_subcommand("werner", "Werner states over p");
  add_run_flags(werner, werner_opt, "0:1:0.05");

  int table = 0;
  double tolerance = 0.10;
  auto* fixtures = app.add_subcommand("fixtures", "Score an embedded experimental table against theory");
  fixtures->add_option("--table", table, "Table 1, 2 or 3")->required()->check(CLI::Range(1, 3));
  fixtures->add_option("--tolerance", tolerance, "Maximum allowed absolute deviation (bits)")
      ->capture_default_str();
  add_output_flags(fixtures, fixtures_opt);

  double theta = 10.0;
  std::string input;
  tomo_opt.format = "json";
  auto* tomo = app.add_subcommand("tomo-demo", "Simulate and reconstruct one Bob qubit");
  tomo->add_option("--theta", theta, "Family-1 angle in degrees")->capture_default_str();
  tomo->add_option("--input", input, "Reconstruct from a TomographyRecord JSON file instead");
  tomo->add_option("--shots", tomo_opt.shots, "Shots per basis")->capture_default_str();
  tomo->add_option("--seed", tomo_opt.seed, "PRNG seed")->capture_default_str();
  add_output_flags(tomo, tomo_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*pure1) return run_experiment_command(qassist::Experiment::Pure1, pure1_opt);
    if (*pure2) return run_experiment_command(qassist::Experiment::Pure2, pure2_opt);
    if (*werner) return run_experiment_command(qassist::Experiment::Werner, werner_opt);
    if (*fixtures) return run_fixtures_command(table, tolerance, fixtures_opt);
    if (*tomo) return run_tomo_demo(theta, input, tomo_opt);
  } catch (const qassist::ParameterError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
