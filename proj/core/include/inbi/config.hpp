#ifndef INBI_CONFIG_HPP
#define INBI_CONFIG_HPP

#include <cstdint>
#include <string>

#include "inbi/pipeline.hpp"
#include "inbi/trr.hpp"

/// Every tolerance and default of the toolkit in one place, loadable from a
/// JSON config file so experiments can pin or override them.
namespace inbi::config {

struct ToolkitConfig {
  // Solver.
  double solver_mesh_tolerance = 1e-6;
  int solver_max_evaluations = 5000;
  int solver_multistarts = 3;
  double solver_initial_mesh = 0.1;
  double solver_penalty_initial = 1e2;
  double solver_penalty_growth = 100.0;
  int solver_penalty_rounds = 4;

  // Frontier stages.
  int nbi_divisions = 10;
  double duplicate_tolerance = 1e-9;
  double min_weight_step = 0.01;
  int auam_max_uniform_points = 300;

  // Compromise.
  double compromise_lambda_reg = 1e-8;
  double compromise_max_condition = 1e8;

  // TRR boundary condition.
  double trr_rho_b = 1.0;
  double trr_gamma_l = 0.1;
  double trr_epsilon_gen = 1e-6;
  double lambda_trr = 1.0;

  // Scenario synthesis.
  int synth_buildings = 20;
  double low_light_pv_factor = 0.4;
  double low_wind_factor = 0.4;

  std::uint64_t seed = 0;

  [[nodiscard]] moo::ScalarSolverOptions solver_options() const;
  [[nodiscard]] pipeline::PipelineConfig pipeline_config() const;
  [[nodiscard]] trr::TrrParams trr_params() const;
};

/// Loads overrides from a JSON file; unknown keys are an error, missing keys
/// keep their defaults.
ToolkitConfig load_config(const std::string& path);

void save_config(const ToolkitConfig& config, const std::string& path);

}  // namespace inbi::config

#endif  // INBI_CONFIG_HPP
