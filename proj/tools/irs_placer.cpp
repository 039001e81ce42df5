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

// irs-placer: command-line front end for IRS placement experiments.
//
//   irs-placer <place|sweep|curvature|compare|check> --config <path>
//              [--seed <u64>] [--out <dir>] [--method greedy|lazy|random|exhaustive]
//              [--m <int>] [--trials <int>]
//
// Exit codes: 0 success, 2 config or usage error, 3 infeasible (enumeration
// cap exceeded), 4 numerical failure (including a failed certificate or
// property check), 1 anything else.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "irs/errors.hpp"
#include "irs/harness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitOther = 1;
constexpr int kExitConfig = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitNumerical = 4;

struct Options {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out_dir = ".";
  std::string method = "greedy";
  std::optional<int> budget;
  std::optional<int> trials;
};

void add_common(CLI::App* cmd, Options& opts, bool with_method) {
  cmd->add_option("--config", opts.config_path, "Scenario config (JSON)")
      ->required();
  cmd->add_option("--seed", opts.seed, "Override the config seed");
  cmd->add_option("--out", opts.out_dir, "Output directory");
  cmd->add_option("--m", opts.budget, "Override the IRS budget M");
  if (with_method) {
    cmd->add_option("--method", opts.method, "greedy|lazy|random|exhaustive");
  }
}

void write_json(const std::filesystem::path& dir, const std::string& name,
                const nlohmann::json& j) {
  irs::write_file_atomic(dir / name, j.dump(2) + "\n");
}

int run(const std::string& command, const Options& opts) {
  irs::ScenarioConfig config = irs::load_config(opts.config_path);
  if (opts.seed) config.seed = *opts.seed;
  if (opts.budget) config.budget = *opts.budget;
  config.validate();
  const irs::Method method = irs::parse_method(opts.method);
  const std::filesystem::path out = opts.out_dir;

  if (command == "place") {
    const irs::RunRecord record = irs::run_place(config, method);
    write_json(out, "result.json", irs::to_json(record));
    irs::write_file_atomic(out / "placement.csv", irs::placement_csv(record));
    write_json(out, "timing.json",
               irs::timing_json(command, record.wall_clock_seconds));
    std::cout << "placed " << record.placements.size() << " IRS with "
              << irs::to_string(method) << ", f = "
              << irs::format_double(record.final_value) << ", curvature = "
              << irs::format_double(record.certificate.curvature) << "\n";
    return kExitOk;
  }
  if (command == "sweep") {
    irs::Rng rng = irs::experiment_rng(config);
    const irs::SweepTable table = irs::run_sweep(
        config, config.budget, opts.trials.value_or(100), rng, method);
    write_json(out, "result.json", irs::to_json(table));
    irs::write_file_atomic(out / "sweep.csv", irs::sweep_csv(table));
    write_json(out, "timing.json",
               irs::timing_json(command, table.wall_clock_seconds));
    std::cout << irs::sweep_csv(table);
    return kExitOk;
  }
  if (command == "curvature") {
    const irs::CurvatureRecord record = irs::run_curvature(config);
    if (!record.report.excluded.empty()) {
      std::cerr << "warning: " << record.report.excluded.size()
                << " candidate(s) with zero singleton value excluded from the "
                   "curvature minimum\n";
    }
    write_json(out, "result.json", irs::to_json(record));
    write_json(out, "timing.json",
               irs::timing_json(command, record.wall_clock_seconds));
    std::cout << "curvature = " << irs::format_double(record.certificate.curvature)
              << ", tight factor = "
              << irs::format_double(record.certificate.tight_factor) << "\n";
    return kExitOk;
  }
  if (command == "compare") {
    const irs::CompareRecord record =
        irs::run_compare(config, config.budget, method);
    write_json(out, "result.json", irs::to_json(record));
    write_json(out, "timing.json",
               irs::timing_json(command, record.wall_clock_seconds));
    std::cout << "f(greedy) / f(optimum) = " << irs::format_double(record.ratio)
              << (record.chain_holds ? "" : "  CERTIFICATE VIOLATED") << "\n";
    return record.chain_holds ? kExitOk : kExitNumerical;
  }
  // check
  irs::Rng rng = irs::experiment_rng(config);
  const irs::CheckRecord record =
      irs::run_check(config, opts.trials.value_or(1000), rng);
  write_json(out, "result.json", irs::to_json(record));
  write_json(out, "timing.json",
             irs::timing_json(command, record.wall_clock_seconds));
  std::cout << record.report.trials << " trials, "
            << record.report.monotonicity_violations
            << " monotonicity and "
            << record.report.diminishing_returns_violations
            << " diminishing-returns violations\n";
  return record.report.passed() ? kExitOk : kExitNumerical;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Greedy log-det placement of intelligent reflecting surfaces"};
  app.require_subcommand(1);

  Options opts;
  auto* place = app.add_subcommand("place", "Place M IRS and write the placement");
  add_common(place, opts, true);
  auto* sweep = app.add_subcommand(
      "sweep", "Greedy vs random vs bound for M = 1..M_max");
  add_common(sweep, opts, true);
  sweep->add_option("--trials", opts.trials, "Random placements per M");
  auto* curv = app.add_subcommand("curvature", "Curvature and bound factors");
  add_common(curv, opts, false);
  auto* compare = app.add_subcommand("compare", "Greedy vs exhaustive optimum");
  add_common(compare, opts, true);
  auto* check = app.add_subcommand("check", "Randomized submodularity check");
  add_common(check, opts, false);
  check->add_option("--trials", opts.trials, "Sampled chains");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, opts);
  } catch (const irs::ConfigParseError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const irs::ConfigValidationError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const irs::InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitConfig;
  } catch (const irs::InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const irs::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOther;
  }
}
