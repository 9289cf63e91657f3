#include "inbi/config.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace inbi::config {

namespace {

using nlohmann::json;

template <typename T>
void read_key(const json& j, const char* key, T& into) {
  if (j.contains(key)) into = j.at(key).get<T>();
}

}  // namespace

moo::ScalarSolverOptions ToolkitConfig::solver_options() const {
  moo::ScalarSolverOptions opt;
  opt.mesh_tolerance = solver_mesh_tolerance;
  opt.max_evaluations = solver_max_evaluations;
  opt.multistarts = solver_multistarts;
  opt.initial_mesh = solver_initial_mesh;
  opt.penalty_initial = solver_penalty_initial;
  opt.penalty_growth = solver_penalty_growth;
  opt.penalty_rounds = solver_penalty_rounds;
  opt.seed = seed;
  return opt;
}

pipeline::PipelineConfig ToolkitConfig::pipeline_config() const {
  pipeline::PipelineConfig pc;
  pc.seed = seed;
  pc.nbi_divisions = nbi_divisions;
  pc.solver = solver_options();
  pc.compromise_lambda_reg = compromise_lambda_reg;
  pc.compromise_max_condition = compromise_max_condition;
  pc.min_weight_step = min_weight_step;
  pc.duplicate_tolerance = duplicate_tolerance;
  pc.auam_max_uniform_points = auam_max_uniform_points;
  return pc;
}

trr::TrrParams ToolkitConfig::trr_params() const {
  trr::TrrParams params;
  params.rho_b = trr_rho_b;
  params.gamma_l = trr_gamma_l;
  params.epsilon_gen = trr_epsilon_gen;
  return params;
}

ToolkitConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument("config parse error in " + path + ": " +
                                e.what());
  }
  if (!j.is_object()) {
    throw std::invalid_argument("config root must be an object");
  }

  ToolkitConfig c;
  static const char* known[] = {
      "solver_mesh_tolerance", "solver_max_evaluations", "solver_multistarts",
      "solver_initial_mesh", "solver_penalty_initial", "solver_penalty_growth",
      "solver_penalty_rounds", "nbi_divisions", "duplicate_tolerance",
      "min_weight_step", "auam_max_uniform_points", "compromise_lambda_reg",
      "compromise_max_condition", "trr_rho_b", "trr_gamma_l",
      "trr_epsilon_gen", "lambda_trr", "synth_buildings",
      "low_light_pv_factor", "low_wind_factor", "seed"};
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* k : known) {
      if (key == k) {
        ok = true;
        break;
      }
    }
    if (!ok) throw std::invalid_argument("unknown config key: " + key);
  }

  read_key(j, "solver_mesh_tolerance", c.solver_mesh_tolerance);
  read_key(j, "solver_max_evaluations", c.solver_max_evaluations);
  read_key(j, "solver_multistarts", c.solver_multistarts);
  read_key(j, "solver_initial_mesh", c.solver_initial_mesh);
  read_key(j, "solver_penalty_initial", c.solver_penalty_initial);
  read_key(j, "solver_penalty_growth", c.solver_penalty_growth);
  read_key(j, "solver_penalty_rounds", c.solver_penalty_rounds);
  read_key(j, "nbi_divisions", c.nbi_divisions);
  read_key(j, "duplicate_tolerance", c.duplicate_tolerance);
  read_key(j, "min_weight_step", c.min_weight_step);
  read_key(j, "auam_max_uniform_points", c.auam_max_uniform_points);
  read_key(j, "compromise_lambda_reg", c.compromise_lambda_reg);
  read_key(j, "compromise_max_condition", c.compromise_max_condition);
  read_key(j, "trr_rho_b", c.trr_rho_b);
  read_key(j, "trr_gamma_l", c.trr_gamma_l);
  read_key(j, "trr_epsilon_gen", c.trr_epsilon_gen);
  read_key(j, "lambda_trr", c.lambda_trr);
  read_key(j, "synth_buildings", c.synth_buildings);
  read_key(j, "low_light_pv_factor", c.low_light_pv_factor);
  read_key(j, "low_wind_factor", c.low_wind_factor);
  read_key(j, "seed", c.seed);
  return c;
}

void save_config(const ToolkitConfig& c, const std::string& path) {
  json j;
  j["solver_mesh_tolerance"] = c.solver_mesh_tolerance;
  j["solver_max_evaluations"] = c.solver_max_evaluations;
  j["solver_multistarts"] = c.solver_multistarts;
  j["solver_initial_mesh"] = c.solver_initial_mesh;
  j["solver_penalty_initial"] = c.solver_penalty_initial;
  j["solver_penalty_growth"] = c.solver_penalty_growth;
  j["solver_penalty_rounds"] = c.solver_penalty_rounds;
  j["nbi_divisions"] = c.nbi_divisions;
  j["duplicate_tolerance"] = c.duplicate_tolerance;
  j["min_weight_step"] = c.min_weight_step;
  j["auam_max_uniform_points"] = c.auam_max_uniform_points;
  j["compromise_lambda_reg"] = c.compromise_lambda_reg;
  j["compromise_max_condition"] = c.compromise_max_condition;
  j["trr_rho_b"] = c.trr_rho_b;
  j["trr_gamma_l"] = c.trr_gamma_l;
  j["trr_epsilon_gen"] = c.trr_epsilon_gen;
  j["lambda_trr"] = c.lambda_trr;
  j["synth_buildings"] = c.synth_buildings;
  j["low_light_pv_factor"] = c.low_light_pv_factor;
  j["low_wind_factor"] = c.low_wind_factor;
  j["seed"] = c.seed;

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write config file: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace inbi::config
