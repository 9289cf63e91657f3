#ifndef INBI_SYNTHESIS_HPP
#define INBI_SYNTHESIS_HPP

#include <cstdint>

#include "inbi/cases.hpp"
#include "inbi/core_model.hpp"
#include "inbi/scenario_io.hpp"

/// Seeded synthetic scenarios standing in for the benchmark's confidential
/// measurement data: smooth diurnal profiles with reproducible jitter.
namespace inbi::synthesis {

struct SynthesisSpec {
  std::uint64_t seed = 0;
  int n_buildings = 20;  // split evenly into ordinary and special

  // Profile shape parameters (per-building magnitudes in MW). Renewables
  // sit near the per-building load so that curtailment is a live trade-off.
  double base_load = 1.0;
  double morning_peak_hour = 9.0;
  double evening_peak_hour = 19.5;
  double pv_peak_per_building = 0.55;   // PV envelope amplitude
  double wind_base_per_building = 0.35;  // wind baseline

  // Weather derating used by the case considerations.
  double low_light_pv_factor = 0.4;
  double low_wind_factor = 0.4;

  cases::Consideration consideration = cases::Consideration::kNone;
};

/// Deterministic for a fixed spec. The PV envelope is a half-cosine bell
/// over daylight whose integral has a closed form, so synthetic output is
/// checkable against it.
BuildingScenario synthesize_scenario(const SynthesisSpec& spec);

/// Same scenario together with the per-building renewable series, for
/// writing building files.
scenario_io::ScenarioBundle synthesize_bundle(const SynthesisSpec& spec);

/// Closed-form day integral (MWh) of the undisturbed PV envelope of `spec`,
/// after weather derating.
double pv_envelope_integral(const SynthesisSpec& spec);

}  // namespace inbi::synthesis

#endif  // INBI_SYNTHESIS_HPP
