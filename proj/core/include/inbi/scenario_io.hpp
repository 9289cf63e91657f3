#ifndef INBI_SCENARIO_IO_HPP
#define INBI_SCENARIO_IO_HPP

#include <string>
#include <vector>

#include "inbi/core_model.hpp"
#include "inbi/trr.hpp"

/// Scenario persistence: one CSV per building
/// (`slot,load_critical,load_sched,load_switch,wind,pv,temperature`) plus a
/// JSON manifest naming the files, the roster split, the cost factors and
/// the TRR parameters.
namespace inbi::scenario_io {

/// A scenario together with the per-building renewable series its files
/// carry (the in-memory scenario only keeps the totals).
struct ScenarioBundle {
  BuildingScenario scenario;
  std::vector<SlotSeries> pv_per_building;
  std::vector<SlotSeries> wind_per_building;
  trr::TrrParams trr_params;
  double lambda_trr = 1.0;
};

/// Reads the manifest at `manifest_path` and every building file it names.
/// Scenario-level wind/PV profiles are the per-building sums; the
/// temperature profile comes from the first building file.
ScenarioBundle load_scenario(const std::string& manifest_path);

/// Writes the manifest and one CSV per building into `directory`.
void save_scenario(const ScenarioBundle& bundle, const std::string& directory);

}  // namespace inbi::scenario_io

#endif  // INBI_SCENARIO_IO_HPP
