// Command-line front end: scenario synthesis, frontier generation, the
// case-matrix comparison and the two experiments, all writing CSV reports
// into an output directory.

#include <CLI11.hpp>

#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "inbi/building_problem.hpp"
#include "inbi/config.hpp"
#include "inbi/experiments.hpp"
#include "inbi/pipeline.hpp"
#include "inbi/scenario_io.hpp"
#include "inbi/synthesis.hpp"

namespace {

namespace fs = std::filesystem;
using namespace inbi;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

struct GlobalArgs {
  std::string config_path;
  std::string scenario_manifest;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string out_dir = "out";
};

config::ToolkitConfig resolve_config(const GlobalArgs& args) {
  config::ToolkitConfig toolkit;
  if (!args.config_path.empty()) {
    toolkit = config::load_config(args.config_path);
  }
  if (args.seed_set) toolkit.seed = args.seed;
  return toolkit;
}

synthesis::SynthesisSpec spec_from(const config::ToolkitConfig& toolkit) {
  synthesis::SynthesisSpec spec;
  spec.seed = toolkit.seed;
  spec.n_buildings = toolkit.synth_buildings;
  spec.low_light_pv_factor = toolkit.low_light_pv_factor;
  spec.low_wind_factor = toolkit.low_wind_factor;
  return spec;
}

/// Scenario either from a manifest on disk or synthesized from the seed.
scenario_io::ScenarioBundle resolve_scenario(
    const GlobalArgs& args, const config::ToolkitConfig& toolkit,
    cases::Consideration consideration) {
  if (!args.scenario_manifest.empty()) {
    return scenario_io::load_scenario(args.scenario_manifest);
  }
  auto spec = spec_from(toolkit);
  spec.consideration = consideration;
  auto bundle = synthesis::synthesize_bundle(spec);
  bundle.trr_params = toolkit.trr_params();
  bundle.lambda_trr = toolkit.lambda_trr;
  return bundle;
}

void ensure_out_dir(const std::string& dir) { fs::create_directories(dir); }

int run_frontier(const GlobalArgs& args, const std::string& algorithm) {
  const auto toolkit = resolve_config(args);
  const auto bundle =
      resolve_scenario(args, toolkit, cases::Consideration::kNone);

  building::BuildingProblemOptions options;
  options.trr_params = bundle.trr_params;
  building::BuildingProblem bp(bundle.scenario, options);

  const auto result =
      pipeline::run(bp.as_moo_problem(),
                    pipeline::algorithm_from_name(algorithm),
                    toolkit.pipeline_config());

  ensure_out_dir(args.out_dir);
  const fs::path dir(args.out_dir);
  experiments::write_frontier_csv(result.frontier,
                                  (dir / "frontier.csv").string());
  experiments::write_compromise_csv(result.selected, result.closeness,
                                    result.compromise_index,
                                    (dir / "compromise.csv").string());
  if (!result.selection_trace.empty()) {
    experiments::write_selection_trace_csv(
        result.selection_trace, (dir / "selection_trace.csv").string());
  }
  if (!result.refinement_records.empty()) {
    experiments::write_refinement_csv(result.refinement_records,
                                      (dir / "refinement.csv").string());
  }

  const auto& best = result.compromise();
  std::cout << "frontier: " << result.frontier.size() << " points, selected "
            << result.selected.size() << "\n";
  std::cout << "compromise: equipment " << best.values[0] << " yuan, supply "
            << best.values[1] << " yuan, comfort "
            << (1.0 - best.values[2]) * 100.0 << "%\n";
  for (const auto& warning : result.warnings) {
    std::cerr << "warning: " << warning << "\n";
  }
  return kExitOk;
}

int run_single_case(const GlobalArgs& args, const std::string& case_id,
                    const std::string& algorithm) {
  const auto toolkit = resolve_config(args);
  int id = 0;
  if (case_id == "standard") {
    id = 0;
  } else {
    id = std::stoi(case_id);
  }
  const auto& config = cases::case_by_id(id);
  const auto row = experiments::run_case(
      config, pipeline::algorithm_from_name(algorithm), spec_from(toolkit),
      toolkit);

  ensure_out_dir(args.out_dir);
  experiments::write_case_rows_csv(
      {row}, (fs::path(args.out_dir) / "case.csv").string());
  std::cout << experiments::format_case_table({row});
  return kExitOk;
}

int run_compare_all(const GlobalArgs& args) {
  const auto toolkit = resolve_config(args);
  const auto rows = experiments::compare_all(spec_from(toolkit), toolkit);

  ensure_out_dir(args.out_dir);
  experiments::write_case_rows_csv(
      rows, (fs::path(args.out_dir) / "compare_all.csv").string());
  const auto table = experiments::format_case_table(rows);
  std::ofstream summary(fs::path(args.out_dir) / "compare_all.txt");
  summary << table;
  std::cout << table;
  return kExitOk;
}

int run_trr_experiment(const GlobalArgs& args) {
  const auto toolkit = resolve_config(args);
  const auto report =
      experiments::trr_deviation_experiment(spec_from(toolkit), toolkit);

  ensure_out_dir(args.out_dir);
  const fs::path dir(args.out_dir);
  experiments::write_trr_deviation_csv(report,
                                       (dir / "trr_deviation.csv").string());
  experiments::write_trr_series_csv(report.series_on,
                                    (dir / "trr_series.csv").string());

  std::cout << "mean allocation deviation: TRR on " << report.mean_deviation_on
            << "%, TRR off " << report.mean_deviation_off << "% (reduction "
            << report.reduction_percent << "%)\n";
  return kExitOk;
}

int run_smoothing(const GlobalArgs& args, int from, int to, int step) {
  if (from < 2 || to < from || step <= 0) {
    std::cerr << "invalid building range\n";
    return kExitUsage;
  }
  const auto toolkit = resolve_config(args);
  std::vector<int> counts;
  for (int n = from; n <= to; n += step) counts.push_back(n);

  const auto rows =
      experiments::smoothing_experiment(counts, spec_from(toolkit), toolkit);
  ensure_out_dir(args.out_dir);
  experiments::write_smoothing_csv(
      rows, (fs::path(args.out_dir) / "smoothing.csv").string());
  for (const auto& row : rows) {
    std::cout << row.buildings << " buildings, "
              << pipeline::algorithm_name(row.algorithm)
              << ": optimization degree " << row.optimization_degree << "%\n";
  }
  return kExitOk;
}

int run_synth(const GlobalArgs& args) {
  const auto toolkit = resolve_config(args);
  auto bundle = resolve_scenario(args, toolkit, cases::Consideration::kNone);
  scenario_io::save_scenario(bundle, args.out_dir);
  std::cout << "wrote scenario with " << bundle.scenario.building_count()
            << " buildings to " << args.out_dir << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Smart-building multi-objective dispatch toolkit"};
  app.require_subcommand(1);

  GlobalArgs args;
  app.add_option("--config", args.config_path, "JSON config file")
      ->check(CLI::ExistingFile);
  app.add_option("--scenario", args.scenario_manifest,
                 "scenario manifest (skips synthesis)")
      ->check(CLI::ExistingFile);
  auto* seed_opt = app.add_option("--seed", args.seed, "random seed");
  app.add_option("--out", args.out_dir, "output directory");

  std::string algorithm = "inbi";
  std::string case_id = "standard";
  int from = 10, to = 80, step = 10;

  auto* frontier_cmd =
      app.add_subcommand("frontier", "generate a frontier and compromise");
  frontier_cmd->add_option("--alg", algorithm, "inbi, alg1 or alg2");

  auto* case_cmd = app.add_subcommand("case", "run one built-in case");
  case_cmd->add_option("--id", case_id, "standard or 1..12")->required();
  case_cmd->add_option("--alg", algorithm, "inbi, alg1 or alg2");

  app.add_subcommand("compare-all",
                     "all 13 cases under all three algorithms");
  app.add_subcommand("trr-exp", "allocation deviation with TRR on and off");

  auto* smoothing_cmd =
      app.add_subcommand("smoothing", "optimization degree over group size");
  smoothing_cmd->add_option("--from", from, "first building count");
  smoothing_cmd->add_option("--to", to, "last building count");
  smoothing_cmd->add_option("--step", step, "count increment");

  app.add_subcommand("synth", "write a synthetic scenario to --out");

  // global flags remain usable after the subcommand name
  for (auto* sub : app.get_subcommands(
           [](const CLI::App*) { return true; })) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  args.seed_set = seed_opt->count() > 0;

  try {
    if (app.got_subcommand("frontier")) return run_frontier(args, algorithm);
    if (app.got_subcommand("case")) {
      return run_single_case(args, case_id, algorithm);
    }
    if (app.got_subcommand("compare-all")) return run_compare_all(args);
    if (app.got_subcommand("trr-exp")) return run_trr_experiment(args);
    if (app.got_subcommand("smoothing")) {
      return run_smoothing(args, from, to, step);
    }
    if (app.got_subcommand("synth")) return run_synth(args);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}
