// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IRS_HARNESS_HPP_
#define IRS_HARNESS_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "irs/channel.hpp"
#include "irs/geometry.hpp"
#include "irs/objective.hpp"
#include "irs/optimizer.hpp"

namespace irs {

// Full parameter bundle of one placement experiment. Defaults reproduce the
// reference scenario: 8x8 radar at the origin, target at 60 m / pi/4,
// 100 ranges x 12 azimuths, 16-element IRS with random phases.
struct ScenarioConfig {
  std::string description;
  ArraySpec array;
  GridSpec grid;
  double target_range = 60.0;
  double target_azimuth = 0.7853981633974483;  // pi / 4
  double noise_power = 1.0;
  double transmit_power = 1.0;
  int samples = 64;
  ReflectivityModel reflectivity = ReflectivityModel::unit();
  std::uint64_t seed = 2024;
  int budget = 5;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;

  // Throws ConfigValidationError on any invariant breach, including
  // budget outside [1, grid size].
  void validate() const;
};

// Parses the JSON config text. Malformed text raises ConfigParseError;
// wrong types, unknown keys and invariant breaches raise
// ConfigValidationError. Absent fields keep their defaults.
ScenarioConfig parse_config(std::string_view text);
ScenarioConfig load_config(const std::filesystem::path& path);
ScenarioConfig config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ScenarioConfig& config);

// Materialized scenario: grid, one phase profile per candidate and the
// objective context.
struct Problem {
  ScenarioConfig config;
  Scene scene;
  std::vector<PhaseProfile> phases;
  ObjectiveContext context;
};

// Phase profiles are drawn from derive_seed(config.seed, kPhaseStream) in
// candidate order.
Problem build_problem(const ScenarioConfig& config);

inline constexpr std::uint64_t kPhaseStream = 0;
inline constexpr std::uint64_t kExperimentStream = 1;

// RNG for random baselines and property sampling of one run.
Rng experiment_rng(const ScenarioConfig& config);

struct PlacedIrs {
  int index = 0;
  double range = 0.0;
  double azimuth = 0.0;
  double x = 0.0;
  double y = 0.0;
  double marginal_gain = 0.0;
  double value = 0.0;
};

struct RunRecord {
  ScenarioConfig config;
  Method method = Method::kGreedy;
  std::vector<PlacedIrs> placements;
  double final_value = 0.0;
  std::uint64_t evaluations = 0;
  Certificate certificate;
  int curvature_argmin = -1;
  double wall_clock_seconds = 0.0;
};

// Places config.budget IRS with `method`. Random placement draws from
// experiment_rng(config).
RunRecord run_place(const ScenarioConfig& config, Method method);

struct SweepRow {
  int budget = 0;
  double f_greedy = 0.0;
  double random_mean = 0.0;
  double random_std = 0.0;
  // Factor times f(S*) when the exhaustive optimum fits under the cap,
  // the bare factor otherwise.
  double bound_tight = 0.0;
  double bound_loose = 0.0;
  std::optional<double> optimum;
};

struct SweepTable {
  ScenarioConfig config;
  int max_budget = 0;
  int trials = 0;
  Certificate certificate;
  std::vector<SweepRow> rows;
  double wall_clock_seconds = 0.0;
};

// `greedy_variant` picks greedy or lazy greedy for the greedy column; both
// yield the same placements.
SweepTable run_sweep(const ScenarioConfig& config, int max_budget, int trials,
                     Rng& rng, Method greedy_variant = Method::kGreedy);

struct CurvatureRecord {
  ScenarioConfig config;
  CurvatureReport report;
  Candidate argmin;  // location attaining the minimum ratio
  Certificate certificate;
  double wall_clock_seconds = 0.0;
};

CurvatureRecord run_curvature(const ScenarioConfig& config);

struct CompareRecord {
  ScenarioConfig config;
  int budget = 0;
  SelectionResult greedy;
  SelectionResult exhaustive;
  double ratio = 1.0;  // f(S_gr) / f(S*), 1 when f(S*) == 0
  Certificate certificate;
  bool chain_holds = false;
  double wall_clock_seconds = 0.0;
};

// Throws InfeasibleError when the exhaustive search exceeds the cap.
CompareRecord run_compare(const ScenarioConfig& config, int budget,
                          Method greedy_variant = Method::kGreedy);

struct CheckRecord {
  ScenarioConfig config;
  SubmodularityReport report;
  double wall_clock_seconds = 0.0;
};

CheckRecord run_check(const ScenarioConfig& config, int trials, Rng& rng);

// Structured records. Wall-clock time is deliberately left out so identical
// inputs serialize to identical bytes; see timing_json.
nlohmann::json to_json(const RunRecord& record);
nlohmann::json to_json(const SweepTable& table);
nlohmann::json to_json(const CurvatureRecord& record);
nlohmann::json to_json(const CompareRecord& record);
nlohmann::json to_json(const CheckRecord& record);
nlohmann::json timing_json(std::string_view command, double wall_clock_seconds);

// index,r_m,theta_rad,x_m,y_m,marginal_gain
std::string placement_csv(const RunRecord& record);
// M,f_greedy,f_random_mean,f_random_std,bound_tight,bound_loose
std::string sweep_csv(const SweepTable& table);

// Shortest round-trip decimal form.
std::string format_double(double value);

// Writes to a sibling temp file, then renames over `path`.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content);

}  // namespace irs

#endif  // IRS_HARNESS_HPP_
