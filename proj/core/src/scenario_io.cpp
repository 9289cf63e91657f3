#include "inbi/scenario_io.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace inbi::scenario_io {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr const char* kManifestName = "scenario.json";
constexpr const char* kCsvHeader =
    "slot,load_critical,load_sched,load_switch,wind,pv,temperature";

struct BuildingFile {
  BuildingLoadProfile loads;
  SlotSeries wind;
  SlotSeries pv;
  SlotSeries temperature;
};

BuildingFile read_building_csv(const fs::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open building file: " + path.string());
  }
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw std::runtime_error("bad header in " + path.string());
  }

  BuildingFile bf;
  bf.loads.critical.reserve(kSlotsPerDay);
  int expected_slot = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell;
    std::vector<double> fields;
    while (std::getline(row, cell, ',')) {
      fields.push_back(std::stod(cell));
    }
    if (fields.size() != 7) {
      throw std::runtime_error("expected 7 columns in " + path.string());
    }
    if (static_cast<int>(fields[0]) != expected_slot) {
      throw std::runtime_error("slots out of order in " + path.string());
    }
    ++expected_slot;
    bf.loads.critical.push_back(fields[1]);
    bf.loads.schedulable.push_back(fields[2]);
    bf.loads.switchable.push_back(fields[3]);
    bf.wind.push_back(fields[4]);
    bf.pv.push_back(fields[5]);
    bf.temperature.push_back(fields[6]);
  }
  if (bf.loads.critical.size() != kSlotsPerDay) {
    throw std::runtime_error(path.string() + ": expected 96 slot rows, got " +
                             std::to_string(bf.loads.critical.size()));
  }
  return bf;
}

void write_building_csv(const fs::path& path, const BuildingLoadProfile& loads,
                        const SlotSeries& wind, const SlotSeries& pv,
                        const SlotSeries& temperature) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write building file: " + path.string());
  }
  out << kCsvHeader << "\n";
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (std::size_t t = 0; t < kSlotsPerDay; ++t) {
    out << t << ',' << loads.critical[t] << ',' << loads.schedulable[t] << ','
        << loads.switchable[t] << ',' << wind[t] << ',' << pv[t] << ','
        << temperature[t] << "\n";
  }
}

json coefficients_to_json(const trr::CoefficientMatrix& k) {
  json rows = json::array();
  for (const auto& row : k) rows.push_back(row);
  return rows;
}

trr::CoefficientMatrix coefficients_from_json(const json& j) {
  trr::CoefficientMatrix k;
  for (const auto& row : j) {
    k.push_back(row.get<std::vector<double>>());
  }
  return k;
}

}  // namespace

ScenarioBundle load_scenario(const std::string& manifest_path) {
  const fs::path manifest_file(manifest_path);
  std::ifstream in(manifest_file);
  if (!in) {
    throw std::invalid_argument("cannot open manifest: " + manifest_path);
  }
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument("manifest parse error in " + manifest_path +
                                ": " + e.what());
  }

  ScenarioBundle bundle;
  BuildingScenario& sc = bundle.scenario;
  sc.n_ordinary = j.at("n_ordinary").get<int>();
  sc.n_special = j.at("n_special").get<int>();
  sc.p1_total = j.value("p1_total", 0.0);
  sc.p2_total = j.value("p2_total", 0.0);

  const auto& factors = j.at("cost_factors");
  sc.cost_factors.wind_operating = factors.at("wind_operating").get<double>();
  sc.cost_factors.wind_maintenance =
      factors.at("wind_maintenance").get<double>();
  sc.cost_factors.pv_generation = factors.at("pv_generation").get<double>();

  sc.ac_gain = j.at("ac_gain").get<std::vector<double>>();

  if (j.contains("trr")) {
    const auto& t = j.at("trr");
    bundle.trr_params.rho_b = t.value("rho_b", bundle.trr_params.rho_b);
    bundle.trr_params.gamma_l = t.value("gamma_l", bundle.trr_params.gamma_l);
    bundle.trr_params.epsilon_gen =
        t.value("epsilon_gen", bundle.trr_params.epsilon_gen);
    bundle.lambda_trr = t.value("lambda_trr", bundle.lambda_trr);
    if (t.contains("k_alpha")) {
      bundle.trr_params.k_alpha = coefficients_from_json(t.at("k_alpha"));
    }
    if (t.contains("k_beta")) {
      bundle.trr_params.k_beta = coefficients_from_json(t.at("k_beta"));
    }
    bundle.trr_params.validate();
  }

  const auto files = j.at("building_files").get<std::vector<std::string>>();
  if (files.empty()) throw std::runtime_error("manifest lists no buildings");

  const fs::path dir = manifest_file.parent_path();
  sc.wind_profile.assign(kSlotsPerDay, 0.0);
  sc.pv_profile.assign(kSlotsPerDay, 0.0);
  sc.wind_lower.assign(kSlotsPerDay, 0.0);
  sc.pv_lower.assign(kSlotsPerDay, 0.0);

  bool first = true;
  for (const auto& name : files) {
    BuildingFile bf = read_building_csv(dir / name);
    if (first) {
      sc.temperature = bf.temperature;
      first = false;
    }
    for (std::size_t t = 0; t < kSlotsPerDay; ++t) {
      sc.wind_profile[t] += bf.wind[t];
      sc.pv_profile[t] += bf.pv[t];
    }
    sc.load_profiles.push_back(std::move(bf.loads));
    bundle.wind_per_building.push_back(std::move(bf.wind));
    bundle.pv_per_building.push_back(std::move(bf.pv));
  }

  sc.validate();
  return bundle;
}

void save_scenario(const ScenarioBundle& bundle,
                   const std::string& directory) {
  bundle.scenario.validate();
  const int n = bundle.scenario.building_count();
  if (static_cast<int>(bundle.pv_per_building.size()) != n ||
      static_cast<int>(bundle.wind_per_building.size()) != n) {
    throw std::invalid_argument(
        "bundle per-building series do not match the roster");
  }

  const fs::path dir(directory);
  fs::create_directories(dir);

  json j;
  j["n_ordinary"] = bundle.scenario.n_ordinary;
  j["n_special"] = bundle.scenario.n_special;
  j["p1_total"] = bundle.scenario.p1_total;
  j["p2_total"] = bundle.scenario.p2_total;
  j["cost_factors"] = {
      {"wind_operating", bundle.scenario.cost_factors.wind_operating},
      {"wind_maintenance", bundle.scenario.cost_factors.wind_maintenance},
      {"pv_generation", bundle.scenario.cost_factors.pv_generation},
  };
  j["ac_gain"] = bundle.scenario.ac_gain;
  j["trr"] = {
      {"rho_b", bundle.trr_params.rho_b},
      {"gamma_l", bundle.trr_params.gamma_l},
      {"epsilon_gen", bundle.trr_params.epsilon_gen},
      {"lambda_trr", bundle.lambda_trr},
  };
  if (!bundle.trr_params.k_alpha.empty()) {
    j["trr"]["k_alpha"] = coefficients_to_json(bundle.trr_params.k_alpha);
  }
  if (!bundle.trr_params.k_beta.empty()) {
    j["trr"]["k_beta"] = coefficients_to_json(bundle.trr_params.k_beta);
  }

  std::vector<std::string> names;
  for (int b = 0; b < n; ++b) {
    std::ostringstream name;
    name << "building_" << std::setw(2) << std::setfill('0') << b << ".csv";
    names.push_back(name.str());
    write_building_csv(dir / names.back(),
                       bundle.scenario.load_profiles[b],
                       bundle.wind_per_building[b], bundle.pv_per_building[b],
                       bundle.scenario.temperature);
  }
  j["building_files"] = names;

  std::ofstream out(dir / kManifestName);
  if (!out) {
    throw std::runtime_error("cannot write manifest in " + directory);
  }
  out << j.dump(2) << "\n";
}

}  // namespace inbi::scenario_io
