#include "inbi/synthesis.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "inbi/rng.hpp"

namespace inbi::synthesis {

namespace {

constexpr double kDaylightStart = 6.0;   // hours
constexpr double kDaylightHours = 14.0;  // bell width
constexpr double kPi = 3.14159265358979323846;

double slot_hour(std::size_t t) { return static_cast<double>(t) * kSlotHours; }

double gaussian_bump(double hour, double center, double sigma) {
  const double d = hour - center;
  return std::exp(-0.5 * d * d / (sigma * sigma));
}

/// sin^2 bell over the daylight window, zero outside.
double pv_bell(double hour) {
  if (hour < kDaylightStart || hour > kDaylightStart + kDaylightHours) {
    return 0.0;
  }
  const double s = std::sin(kPi * (hour - kDaylightStart) / kDaylightHours);
  return s * s;
}

struct WeatherFactors {
  double pv = 1.0;
  double wind = 1.0;
};

WeatherFactors weather_factors(const SynthesisSpec& spec) {
  WeatherFactors f;
  switch (spec.consideration) {
    case cases::Consideration::kLowLight:
      f.pv = spec.low_light_pv_factor;
      break;
    case cases::Consideration::kLowWind:
      f.wind = spec.low_wind_factor;
      break;
    case cases::Consideration::kLowLightAndWind:
      f.pv = spec.low_light_pv_factor;
      f.wind = spec.low_wind_factor;
      break;
    case cases::Consideration::kNone:
    case cases::Consideration::kCombinedEffect:
      break;
  }
  return f;
}

}  // namespace

double pv_envelope_integral(const SynthesisSpec& spec) {
  // integral of sin^2 over one half period is half the window width
  return weather_factors(spec).pv * spec.pv_peak_per_building *
         spec.n_buildings * kDaylightHours / 2.0;
}

scenario_io::ScenarioBundle synthesize_bundle(const SynthesisSpec& spec) {
  if (spec.n_buildings < 2) {
    throw std::invalid_argument("need at least 2 buildings");
  }
  const int n = spec.n_buildings;
  const WeatherFactors weather = weather_factors(spec);

  scenario_io::ScenarioBundle bundle;
  BuildingScenario& sc = bundle.scenario;
  sc.n_ordinary = (n + 1) / 2;
  sc.n_special = n - sc.n_ordinary;

  std::mt19937_64 building_rng(derive_seed(spec.seed, 0x73796e2d62ULL));
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  // Building magnitudes stay close to each other; the group's consumption
  // is deliberately near-symmetric.
  std::vector<double> base(n);
  std::vector<double> pv_share_raw(n);
  std::vector<double> wind_share_raw(n);
  double pv_share_sum = 0.0;
  double wind_share_sum = 0.0;
  for (int j = 0; j < n; ++j) {
    base[j] = spec.base_load * (1.0 + 0.15 * unit(building_rng));
    pv_share_raw[j] = 1.0 + 0.1 * unit(building_rng);
    wind_share_raw[j] = 1.0 + 0.1 * unit(building_rng);
    pv_share_sum += pv_share_raw[j];
    wind_share_sum += wind_share_raw[j];
  }

  sc.ac_gain.resize(n);
  for (int j = 0; j < n; ++j) {
    sc.ac_gain[j] = 0.02 * base[j] * (1.0 + 0.1 * unit(building_rng));
  }

  sc.load_profiles.resize(n);
  bundle.pv_per_building.assign(n, SlotSeries(kSlotsPerDay, 0.0));
  bundle.wind_per_building.assign(n, SlotSeries(kSlotsPerDay, 0.0));
  sc.wind_profile.assign(kSlotsPerDay, 0.0);
  sc.pv_profile.assign(kSlotsPerDay, 0.0);
  sc.wind_lower.assign(kSlotsPerDay, 0.0);
  sc.pv_lower.assign(kSlotsPerDay, 0.0);
  sc.temperature.assign(kSlotsPerDay, 0.0);

  for (std::size_t t = 0; t < kSlotsPerDay; ++t) {
    const double hour = slot_hour(t);
    sc.temperature[t] = 28.0 + 4.0 * std::sin(2.0 * kPi * (hour - 9.0) / 24.0);
  }

  for (int j = 0; j < n; ++j) {
    std::mt19937_64 profile_rng(
        derive_seed(spec.seed, 0x73796e2d70ULL, static_cast<std::uint64_t>(j)));
    auto& prof = sc.load_profiles[j];
    prof.critical.resize(kSlotsPerDay);
    prof.schedulable.resize(kSlotsPerDay);
    prof.switchable.resize(kSlotsPerDay);

    const double pv_share = pv_share_raw[j] / pv_share_sum;
    const double wind_share = wind_share_raw[j] / wind_share_sum;

    for (std::size_t t = 0; t < kSlotsPerDay; ++t) {
      const double hour = slot_hour(t);
      const double shape =
          0.55 + 0.25 * gaussian_bump(hour, spec.morning_peak_hour, 2.5) +
          0.35 * gaussian_bump(hour, spec.evening_peak_hour, 2.0);
      prof.critical[t] =
          base[j] * shape * (1.0 + 0.03 * unit(profile_rng));
      prof.schedulable[t] =
          base[j] * 0.25 * (0.7 + 0.3 * pv_bell(hour)) *
          (1.0 + 0.03 * unit(profile_rng));
      prof.switchable[t] =
          base[j] * 0.10 * (1.0 + 0.05 * unit(profile_rng));

      const double pv =
          weather.pv * spec.pv_peak_per_building * n * pv_share *
          pv_bell(hour) * (1.0 + 0.03 * unit(profile_rng));
      const double wind =
          weather.wind * spec.wind_base_per_building * n * wind_share *
          (0.8 + 0.2 * std::sin(2.0 * kPi * (hour + 4.0) / 24.0)) *
          (1.0 + 0.08 * unit(profile_rng));
      bundle.pv_per_building[j][t] = pv;
      bundle.wind_per_building[j][t] = wind;
      sc.pv_profile[t] += pv;
      sc.wind_profile[t] += wind;
    }
  }

  double p_special = 0.0;
  double p_ordinary = 0.0;
  for (int j = 0; j < n; ++j) {
    if (j >= sc.n_ordinary) {
      p_special += base[j];
    } else {
      p_ordinary += base[j];
    }
  }
  sc.p1_total = p_special;
  sc.p2_total = p_ordinary;

  sc.validate();
  return bundle;
}

BuildingScenario synthesize_scenario(const SynthesisSpec& spec) {
  return synthesize_bundle(spec).scenario;
}

}  // namespace inbi::synthesis
