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

#include "irs/harness.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

#include "irs/errors.hpp"

namespace irs {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr const char* kSchema = "irs-placer/result/v1";
constexpr double kCertificateSlack = 1e-9;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

json header(std::string_view command, const ScenarioConfig& config) {
  return {{"schema", kSchema},
          {"command", command},
          {"units", {{"angle", "rad"}, {"distance", "m"}}},
          {"seed", config.seed},
          {"config", to_json(config)}};
}

json certificate_json(const Certificate& cert) {
  json j = {{"curvature", cert.curvature},
            {"tight_factor", cert.tight_factor},
            {"loose_factor", cert.loose_factor},
            {"optimum", nullptr}};
  if (cert.optimum) j["optimum"] = *cert.optimum;
  return j;
}

json candidate_json(const Candidate& c) {
  return {{"index", c.index},
          {"r_m", c.range},
          {"theta_rad", c.azimuth},
          {"x_m", c.position.x},
          {"y_m", c.position.y}};
}

json selection_json(const SelectionResult& result) {
  return {{"method", to_string(result.method)},
          {"chosen", result.chosen},
          {"gains", result.gains},
          {"values", result.values},
          {"final_value", result.final_value},
          {"evaluations", result.evaluations}};
}

SelectionResult run_greedy_variant(const ObjectiveContext& ctx, int budget,
                                   Method variant) {
  switch (variant) {
    case Method::kGreedy:
      return greedy_place(ctx, budget);
    case Method::kLazyGreedy:
      return lazy_greedy_place(ctx, budget);
    default:
      throw InvalidArgument("expected method greedy or lazy, got " +
                            std::string(to_string(variant)));
  }
}

}  // namespace

Problem build_problem(const ScenarioConfig& config) {
  config.validate();
  const Scene scene =
      Scene::from_polar(config.target_range, config.target_azimuth,
                        config.noise_power, config.transmit_power, config.samples);
  try {
    CandidateSet candidates = build_candidate_grid(config.grid, scene);
    Rng phase_rng(derive_seed(config.seed, kPhaseStream));
    std::vector<PhaseProfile> phases;
    phases.reserve(candidates.size());
    for (std::size_t u = 0; u < candidates.size(); ++u) {
      phases.push_back(random_phase_profile(config.array.n_irs_elements, phase_rng));
    }
    ObjectiveContext context = build_objective_context(
        candidates, config.array, scene, config.reflectivity, phases);
    if (config.budget > context.size()) {
      throw ConfigValidationError(
          "budget exceeds the number of candidates left after excluding the "
          "target cell");
    }
    return Problem{config, scene, std::move(phases), std::move(context)};
  } catch (const InvalidArgument& e) {
    throw ConfigValidationError(e.what());
  }
}

Rng experiment_rng(const ScenarioConfig& config) {
  return Rng(derive_seed(config.seed, kExperimentStream));
}

RunRecord run_place(const ScenarioConfig& config, Method method) {
  const auto start = Clock::now();
  const Problem problem = build_problem(config);
  const ObjectiveContext& ctx = problem.context;

  SelectionResult result;
  switch (method) {
    case Method::kGreedy:
      result = greedy_place(ctx, config.budget);
      break;
    case Method::kLazyGreedy:
      result = lazy_greedy_place(ctx, config.budget);
      break;
    case Method::kRandom: {
      Rng rng = experiment_rng(config);
      result = random_place(ctx, config.budget, rng);
      break;
    }
    case Method::kExhaustive:
      result = exhaustive_place(ctx, config.budget, config.enumeration_cap);
      break;
  }

  const CurvatureReport curv = curvature(ctx);
  std::optional<double> optimum;
  if (method == Method::kExhaustive) optimum = result.final_value;

  RunRecord record;
  record.config = config;
  record.method = method;
  record.final_value = result.final_value;
  record.evaluations = result.evaluations;
  record.certificate = make_certificate(curv.curvature, optimum);
  record.curvature_argmin = curv.argmin;
  for (std::size_t k = 0; k < result.chosen.size(); ++k) {
    const Candidate& c = ctx.candidate(result.chosen[k]);
    record.placements.push_back({c.index, c.range, c.azimuth, c.position.x,
                                 c.position.y, result.gains[k], result.values[k]});
  }
  record.wall_clock_seconds = seconds_since(start);
  return record;
}

SweepTable run_sweep(const ScenarioConfig& config, int max_budget, int trials,
                     Rng& rng, Method greedy_variant) {
  const auto start = Clock::now();
  if (trials < 1) throw InvalidArgument("sweep: trials must be >= 1");
  const Problem problem = build_problem(config);
  const ObjectiveContext& ctx = problem.context;
  if (max_budget < 1 || max_budget > ctx.size()) {
    throw InvalidArgument("sweep: M_max outside [1, grid size]");
  }

  // Greedy picks are prefix-nested, so one run covers every M.
  const SelectionResult greedy = run_greedy_variant(ctx, max_budget, greedy_variant);
  const CurvatureReport curv = curvature(ctx);

  SweepTable table;
  table.config = config;
  table.max_budget = max_budget;
  table.trials = trials;
  table.certificate = make_certificate(curv.curvature);

  for (int m = 1; m <= max_budget; ++m) {
    SweepRow row;
    row.budget = m;
    row.f_greedy = greedy.values[static_cast<std::size_t>(m - 1)];

    double sum = 0.0;
    std::vector<double> samples;
    samples.reserve(static_cast<std::size_t>(trials));
    for (int t = 0; t < trials; ++t) {
      samples.push_back(random_place(ctx, m, rng).final_value);
      sum += samples.back();
    }
    row.random_mean = sum / trials;
    if (trials > 1) {
      double sq = 0.0;
      for (double v : samples) sq += (v - row.random_mean) * (v - row.random_mean);
      row.random_std = std::sqrt(sq / (trials - 1));
    }

    const auto subsets = binomial(static_cast<std::uint64_t>(ctx.size()),
                                  static_cast<std::uint64_t>(m));
    row.bound_tight = table.certificate.tight_factor;
    row.bound_loose = table.certificate.loose_factor;
    if (subsets <= config.enumeration_cap) {
      row.optimum = exhaustive_place(ctx, m, config.enumeration_cap).final_value;
      row.bound_tight *= *row.optimum;
      row.bound_loose *= *row.optimum;
    }
    table.rows.push_back(row);
  }
  table.wall_clock_seconds = seconds_since(start);
  return table;
}

CurvatureRecord run_curvature(const ScenarioConfig& config) {
  const auto start = Clock::now();
  const Problem problem = build_problem(config);
  CurvatureRecord record;
  record.config = config;
  record.report = curvature(problem.context);
  record.argmin = problem.context.candidate(record.report.argmin);
  record.certificate = make_certificate(record.report.curvature);
  record.wall_clock_seconds = seconds_since(start);
  return record;
}

CompareRecord run_compare(const ScenarioConfig& config, int budget,
                          Method greedy_variant) {
  const auto start = Clock::now();
  const Problem problem = build_problem(config);
  const ObjectiveContext& ctx = problem.context;

  CompareRecord record;
  record.config = config;
  record.budget = budget;
  record.exhaustive = exhaustive_place(ctx, budget, config.enumeration_cap);
  record.greedy = run_greedy_variant(ctx, budget, greedy_variant);
  const double optimum = record.exhaustive.final_value;
  const double achieved = record.greedy.final_value;
  record.ratio = optimum > 0.0 ? achieved / optimum : 1.0;
  record.certificate = make_certificate(curvature(ctx).curvature, optimum);
  const double tight = record.certificate.tight_factor * optimum;
  const double loose = record.certificate.loose_factor * optimum;
  record.chain_holds = achieved >= tight - kCertificateSlack &&
                       tight >= loose - kCertificateSlack;
  record.wall_clock_seconds = seconds_since(start);
  return record;
}

CheckRecord run_check(const ScenarioConfig& config, int trials, Rng& rng) {
  const auto start = Clock::now();
  const Problem problem = build_problem(config);
  CheckRecord record;
  record.config = config;
  record.report = check_submodularity(problem.context, trials, rng);
  record.wall_clock_seconds = seconds_since(start);
  return record;
}

json to_json(const RunRecord& record) {
  json j = header("place", record.config);
  j["method"] = to_string(record.method);
  json placements = json::array();
  json values = json::array();
  for (const PlacedIrs& p : record.placements) {
    placements.push_back({{"index", p.index},
                          {"r_m", p.range},
                          {"theta_rad", p.azimuth},
                          {"x_m", p.x},
                          {"y_m", p.y},
                          {"marginal_gain", p.marginal_gain},
                          {"value", p.value}});
    values.push_back(p.value);
  }
  j["placements"] = std::move(placements);
  j["values"] = std::move(values);
  j["final_value"] = record.final_value;
  j["gain_evaluations"] = record.evaluations;
  j["certificate"] = certificate_json(record.certificate);
  j["certificate"]["curvature_argmin"] = record.curvature_argmin;
  return j;
}

json to_json(const SweepTable& table) {
  json j = header("sweep", table.config);
  j["max_budget"] = table.max_budget;
  j["trials"] = table.trials;
  j["certificate"] = certificate_json(table.certificate);
  json rows = json::array();
  for (const SweepRow& row : table.rows) {
    json r = {{"M", row.budget},
              {"f_greedy", row.f_greedy},
              {"f_random_mean", row.random_mean},
              {"f_random_std", row.random_std},
              {"bound_tight", row.bound_tight},
              {"bound_loose", row.bound_loose},
              {"bound_basis", row.optimum ? "optimum" : "factor"},
              {"optimum", nullptr}};
    if (row.optimum) r["optimum"] = *row.optimum;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j;
}

json to_json(const CurvatureRecord& record) {
  json j = header("curvature", record.config);
  j["certificate"] = certificate_json(record.certificate);
  j["argmin"] = candidate_json(record.argmin);
  j["excluded"] = record.report.excluded;
  return j;
}

json to_json(const CompareRecord& record) {
  json j = header("compare", record.config);
  j["budget"] = record.budget;
  j["greedy"] = selection_json(record.greedy);
  j["exhaustive"] = selection_json(record.exhaustive);
  j["ratio"] = record.ratio;
  j["certificate"] = certificate_json(record.certificate);
  j["chain_holds"] = record.chain_holds;
  return j;
}

json to_json(const CheckRecord& record) {
  json j = header("check", record.config);
  const SubmodularityReport& r = record.report;
  j["trials"] = r.trials;
  j["tolerance"] = r.tolerance;
  j["monotonicity_violations"] = r.monotonicity_violations;
  j["diminishing_returns_violations"] = r.diminishing_returns_violations;
  j["worst_monotonicity_margin"] = r.worst_monotonicity_margin;
  j["worst_diminishing_margin"] = r.worst_diminishing_margin;
  j["passed"] = r.passed();
  return j;
}

json timing_json(std::string_view command, double wall_clock_seconds) {
  return {{"command", command}, {"wall_clock_seconds", wall_clock_seconds}};
}

std::string format_double(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, end);
}

std::string placement_csv(const RunRecord& record) {
  std::string out = "index,r_m,theta_rad,x_m,y_m,marginal_gain\n";
  for (const PlacedIrs& p : record.placements) {
    out += std::to_string(p.index) + ',' + format_double(p.range) + ',' +
           format_double(p.azimuth) + ',' + format_double(p.x) + ',' +
           format_double(p.y) + ',' + format_double(p.marginal_gain) + '\n';
  }
  return out;
}

std::string sweep_csv(const SweepTable& table) {
  std::string out = "M,f_greedy,f_random_mean,f_random_std,bound_tight,bound_loose\n";
  for (const SweepRow& row : table.rows) {
    out += std::to_string(row.budget) + ',' + format_double(row.f_greedy) + ',' +
           format_double(row.random_mean) + ',' + format_double(row.random_std) +
           ',' + format_double(row.bound_tight) + ',' +
           format_double(row.bound_loose) + '\n';
  }
  return out;
}

void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path temp = path;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + temp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw Error("failed writing " + temp.string());
  }
  std::filesystem::rename(temp, path);
}

}  // namespace irs
