#include "inbi/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace inbi {

namespace {

constexpr int kValleyStartMinutes = 23 * 60;  // 23:00
constexpr int kValleyEndMinutes = 6 * 60;     // 06:00 (exclusive)
constexpr int kValleySlotCount = 28;          // 7 hours of 15-minute slots

void require_series_length(const SlotSeries& s, const char* name) {
  if (s.size() != kSlotsPerDay) {
    throw std::invalid_argument(std::string(name) + ": expected " +
                                std::to_string(kSlotsPerDay) +
                                " slot samples, got " +
                                std::to_string(s.size()));
  }
}

void require_non_negative(const SlotSeries& s, const char* name) {
  for (double v : s) {
    if (v < 0.0 || !std::isfinite(v)) {
      throw std::invalid_argument(std::string(name) +
                                  ": power values must be finite and >= 0");
    }
  }
}

/// Peak-time schedulable energy (MWh) of one building, the pool the shift
/// fraction draws from.
double peak_schedulable_energy(const BuildingLoadProfile& prof) {
  double energy = 0.0;
  for (std::size_t s = 0; s < kSlotsPerDay; ++s) {
    if (!is_valley_slot(TimeSlot{static_cast<int>(s)})) {
      energy += prof.schedulable[s] * kSlotHours;
    }
  }
  return energy;
}

SlotDispatch dispatch_slot_impl(const BuildingScenario& scenario,
                                const DispatchDecision& decision,
                                TimeSlot slot,
                                const std::vector<double>& peak_energy) {
  const int n = scenario.building_count();
  const std::size_t t = static_cast<std::size_t>(slot.index);
  const bool valley = is_valley_slot(slot);

  SlotDispatch out;
  out.pv_used.assign(n, 0.0);
  out.wind_used.assign(n, 0.0);
  out.load.assign(n, 0.0);

  const double wind_avail = scenario.wind_profile[t];
  const double pv_avail = scenario.pv_profile[t];
  const double t_out = scenario.temperature[t];

  for (int j = 0; j < n; ++j) {
    const auto& prof = scenario.load_profiles[j];
    double sched = prof.schedulable[t];
    if (decision.shift_fraction > 0.0) {
      if (valley) {
        const double moved = decision.shift_fraction * peak_energy[j];
        sched += moved / (kValleySlotCount * kSlotHours);
      } else {
        sched *= (1.0 - decision.shift_fraction);
      }
    }

    const bool special = j >= scenario.n_ordinary;
    const double setpoint =
        special ? decision.setpoint_special : decision.setpoint_ordinary;
    const double ac = scenario.ac_gain[j] * std::max(t_out - setpoint, 0.0);

    const double load = prof.critical[t] + sched + prof.switchable[t] + ac;
    out.load[j] = load;

    const double pv_share = decision.pv_alloc[j] * pv_avail;
    const double wind_share = decision.wind_alloc[j] * wind_avail;
    const double avail = pv_share + wind_share;
    const double used = std::min(avail, load);
    if (avail > 0.0) {
      out.pv_used[j] = used * (pv_share / avail);
      out.wind_used[j] = used * (wind_share / avail);
    }

    out.totals.load_critical += prof.critical[t];
    out.totals.load_sched += sched;
    out.totals.load_switch += prof.switchable[t] + ac;
    out.totals.pv_used += out.pv_used[j];
    out.totals.wind_used += out.wind_used[j];
  }

  const double total_load = out.totals.load_critical + out.totals.load_sched +
                            out.totals.load_switch;
  out.totals.grid = total_load - out.totals.pv_used - out.totals.wind_used;
  return out;
}

}  // namespace

TimeSlot TimeSlot::from_index(int index) {
  if (index < 0 || index >= static_cast<int>(kSlotsPerDay)) {
    throw std::out_of_range("slot index must be in [0, 95], got " +
                            std::to_string(index));
  }
  return TimeSlot{index};
}

TimeSlot TimeSlot::from_clock(int minutes_since_midnight) {
  if (minutes_since_midnight < 0 || minutes_since_midnight >= 24 * 60 ||
      minutes_since_midnight % 15 != 0) {
    throw std::out_of_range("clock must be a multiple of 15 in [0, 1440)");
  }
  return TimeSlot{minutes_since_midnight / 15};
}

void BuildingScenario::validate() const {
  const int n = building_count();
  if (n <= 0) throw std::invalid_argument("scenario has no buildings");
  if (n_ordinary + n_special != n) {
    throw std::invalid_argument("roster split does not match building count");
  }
  if (static_cast<int>(ac_gain.size()) != n) {
    throw std::invalid_argument("ac_gain must have one entry per building");
  }
  for (double g : ac_gain) {
    if (g < 0.0) throw std::invalid_argument("ac_gain must be >= 0");
  }
  for (const auto& p : load_profiles) {
    require_series_length(p.critical, "critical load");
    require_series_length(p.schedulable, "schedulable load");
    require_series_length(p.switchable, "switchable load");
    require_non_negative(p.critical, "critical load");
    require_non_negative(p.schedulable, "schedulable load");
    require_non_negative(p.switchable, "switchable load");
  }
  require_series_length(wind_profile, "wind profile");
  require_series_length(pv_profile, "pv profile");
  require_series_length(wind_lower, "wind lower bound");
  require_series_length(pv_lower, "pv lower bound");
  require_series_length(temperature, "temperature profile");
  require_non_negative(wind_profile, "wind profile");
  require_non_negative(pv_profile, "pv profile");
  for (std::size_t t = 0; t < kSlotsPerDay; ++t) {
    if (wind_lower[t] > wind_profile[t] || pv_lower[t] > pv_profile[t]) {
      throw std::invalid_argument("renewable lower bound exceeds upper bound");
    }
  }
}

void DispatchDecision::validate(int n_buildings) const {
  const auto check_alloc = [n_buildings](const std::vector<double>& a,
                                         const char* name) {
    if (static_cast<int>(a.size()) != n_buildings) {
      throw InfeasibleDecisionError(std::string(name) +
                                    ": one fraction per building required");
    }
    double sum = 0.0;
    for (double f : a) {
      if (f < 0.0 || !std::isfinite(f)) {
        throw InfeasibleDecisionError(std::string(name) +
                                      ": fractions must be finite and >= 0");
      }
      sum += f;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
      throw InfeasibleDecisionError(std::string(name) +
                                    ": fractions must sum to 1");
    }
  };
  check_alloc(pv_alloc, "pv_alloc");
  check_alloc(wind_alloc, "wind_alloc");
  for (double sp : {setpoint_ordinary, setpoint_special}) {
    if (sp < 22.0 || sp > 30.0) {
      throw InfeasibleDecisionError("setpoint outside [22, 30] degC");
    }
  }
  if (shift_fraction < 0.0 || shift_fraction > 1.0) {
    throw InfeasibleDecisionError("shift_fraction outside [0, 1]");
  }
}

bool is_valley_slot(TimeSlot slot) {
  const int m = slot.clock_minutes();
  return m >= kValleyStartMinutes || m < kValleyEndMinutes;
}

double tariff_rate(TimeSlot slot) { return is_valley_slot(slot) ? 0.3 : 0.7; }

double comfort(double t_in_celsius) {
  if (t_in_celsius < 22.0 || t_in_celsius > 30.0) {
    throw std::domain_error("indoor temperature outside [22, 30] degC");
  }
  return 1.0 - std::abs(t_in_celsius - 26.0) * 0.25;
}

double equipment_cost(const CostFactors& factors, double wind_slot_sum,
                      double wind_monthly_mean, double pv_max) {
  for (double v : {wind_slot_sum, wind_monthly_mean, pv_max}) {
    if (v < 0.0 || !std::isfinite(v)) {
      throw std::invalid_argument("equipment_cost: powers must be >= 0");
    }
  }
  // w2 is quoted per kW while powers are MW.
  const double w2_per_mw = factors.wind_maintenance * 1000.0;
  return factors.wind_operating * wind_slot_sum +
         w2_per_mw * wind_monthly_mean + factors.pv_generation * pv_max;
}

double supply_cost(const SlotSeries& grid_draw) {
  require_series_length(grid_draw, "grid draw");
  double daily = 0.0;
  for (std::size_t t = 0; t < kSlotsPerDay; ++t) {
    const double draw_mw = std::max(grid_draw[t], 0.0);
    const double energy_kwh = draw_mw * kSlotHours * 1000.0;
    daily += energy_kwh * tariff_rate(TimeSlot{static_cast<int>(t)});
  }
  return daily * kDaysPerMonth;
}

double integrate_power(const SlotSeries& series) {
  require_series_length(series, "power series");
  double sum = 0.0;
  for (std::size_t t = 0; t < kSlotsPerDay; ++t) {
    const double next = series[(t + 1) % kSlotsPerDay];
    sum += 0.5 * (series[t] + next);
  }
  return sum * kSlotHours;
}

double balance_residual(const SlotAggregates& a) {
  return a.grid + a.wind_used + a.pv_used -
         (a.load_sched + a.load_critical + a.load_switch);
}

SlotDispatch dispatch_slot(const BuildingScenario& scenario,
                           const DispatchDecision& decision, TimeSlot slot) {
  std::vector<double> peak_energy(scenario.building_count(), 0.0);
  if (decision.shift_fraction > 0.0) {
    for (int j = 0; j < scenario.building_count(); ++j) {
      peak_energy[j] = peak_schedulable_energy(scenario.load_profiles[j]);
    }
  }
  return dispatch_slot_impl(scenario, decision, slot, peak_energy);
}

DispatchEvaluation evaluate_dispatch(const BuildingScenario& scenario,
                                     const DispatchDecision& decision) {
  scenario.validate();
  const int n = scenario.building_count();
  decision.validate(n);

  std::vector<double> peak_energy(n, 0.0);
  for (int j = 0; j < n; ++j) {
    peak_energy[j] = peak_schedulable_energy(scenario.load_profiles[j]);
  }

  DispatchEvaluation ev;
  ev.grid_draw.assign(kSlotsPerDay, 0.0);
  ev.pv_used_total.assign(kSlotsPerDay, 0.0);
  ev.wind_used_total.assign(kSlotsPerDay, 0.0);
  ev.pv_used_per_building.assign(n, SlotSeries(kSlotsPerDay, 0.0));
  ev.wind_used_per_building.assign(n, SlotSeries(kSlotsPerDay, 0.0));

  double wind_slot_sum = 0.0;
  double pv_max = 0.0;

  for (int t = 0; t < static_cast<int>(kSlotsPerDay); ++t) {
    const SlotDispatch sd =
        dispatch_slot_impl(scenario, decision, TimeSlot{t}, peak_energy);

    if (std::abs(balance_residual(sd.totals)) > kBalanceTolerance) {
      throw InfeasibleDecisionError("slot " + std::to_string(t) +
                                    ": power balance violated");
    }
    if (sd.totals.wind_used > scenario.wind_profile[t] + kBalanceTolerance ||
        sd.totals.pv_used > scenario.pv_profile[t] + kBalanceTolerance ||
        sd.totals.wind_used < scenario.wind_lower[t] - kBalanceTolerance ||
        sd.totals.pv_used < scenario.pv_lower[t] - kBalanceTolerance) {
      throw InfeasibleDecisionError("slot " + std::to_string(t) +
                                    ": renewable output outside its bounds");
    }

    ev.grid_draw[t] = sd.totals.grid;
    ev.pv_used_total[t] = sd.totals.pv_used;
    ev.wind_used_total[t] = sd.totals.wind_used;
    for (int j = 0; j < n; ++j) {
      ev.pv_used_per_building[j][t] = sd.pv_used[j];
      ev.wind_used_per_building[j][t] = sd.wind_used[j];
    }
    wind_slot_sum += sd.totals.wind_used;
    pv_max = std::max(pv_max, sd.totals.pv_used);
  }

  const double wind_monthly_mean =
      wind_slot_sum / static_cast<double>(kSlotsPerDay);

  ev.objectives.equipment_cost = equipment_cost(
      scenario.cost_factors, wind_slot_sum, wind_monthly_mean, pv_max);
  ev.objectives.supply_cost = supply_cost(ev.grid_draw);

  const double mean_comfort =
      (scenario.n_ordinary * comfort(decision.setpoint_ordinary) +
       scenario.n_special * comfort(decision.setpoint_special)) /
      static_cast<double>(n);
  ev.objectives.comfort_loss = 1.0 - mean_comfort;
  return ev;
}

ObjectiveVector evaluate_objectives(const BuildingScenario& scenario,
                                    const DispatchDecision& decision) {
  return evaluate_dispatch(scenario, decision).objectives;
}

}  // namespace inbi
