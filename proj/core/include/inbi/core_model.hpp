#ifndef INBI_CORE_MODEL_HPP
#define INBI_CORE_MODEL_HPP

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

/// Smart-building benchmark: tri-objective evaluation of a daily dispatch
/// (equipment cost, power supply cost, occupant comfort loss) over 96
/// fifteen-minute slots.
namespace inbi {

inline constexpr std::size_t kSlotsPerDay = 96;
inline constexpr double kSlotHours = 0.25;
inline constexpr int kDaysPerMonth = 31;  // August

/// Balance slack (MW) treated as numerically zero.
inline constexpr double kBalanceTolerance = 1e-6;

/// Thrown when a dispatch decision violates its own invariants or the
/// scenario's balance/bound constraints; infeasible decisions are flagged,
/// never silently scored.
class InfeasibleDecisionError : public std::runtime_error {
 public:
  explicit InfeasibleDecisionError(const std::string& what)
      : std::runtime_error(what) {}
};

/// One of the 96 fifteen-minute slots of the day.
struct TimeSlot {
  int index = 0;  // in [0, 95]

  /// Minutes since midnight at the start of the slot.
  [[nodiscard]] int clock_minutes() const { return index * 15; }

  static TimeSlot from_index(int index);
  static TimeSlot from_clock(int minutes_since_midnight);
};

using SlotSeries = std::vector<double>;  // exactly kSlotsPerDay entries

/// Per-building daily load decomposition (MW per slot).
struct BuildingLoadProfile {
  SlotSeries critical;     // P_Gj
  SlotSeries schedulable;  // P_Kd
  SlotSeries switchable;   // P_Kq
};

/// Operating and maintenance cost factors of the renewable equipment.
struct CostFactors {
  double wind_operating = 2070.0;    // w1, yuan per MW
  double wind_maintenance = 0.096;   // w2, yuan per kW
  double pv_generation = 5000.0;     // l, yuan per MW
};

/// Immutable description of the building group and its daily profiles.
/// All power values are MW; profiles hold exactly 96 slot samples.
struct BuildingScenario {
  int n_ordinary = 0;  // paper's n
  int n_special = 0;   // paper's m

  std::vector<BuildingLoadProfile> load_profiles;  // one per building
  std::vector<double> ac_gain;  // MW of cooling load per degC above setpoint

  SlotSeries wind_profile;  // P_Fl upper bound (available wind, total)
  SlotSeries pv_profile;    // P_Gf upper bound (available PV, total)
  SlotSeries wind_lower;    // lower Eq-style bound, usually zero
  SlotSeries pv_lower;
  SlotSeries temperature;   // outdoor degC

  CostFactors cost_factors;

  double p1_total = 0.0;  // total power of special buildings (metadata)
  double p2_total = 0.0;  // total power of ordinary buildings (metadata)

  [[nodiscard]] int building_count() const {
    return static_cast<int>(load_profiles.size());
  }

  /// Checks profile lengths, non-negativity and roster consistency;
  /// throws std::invalid_argument on violation.
  void validate() const;
};

/// The decision variables of the dispatch problem: how the shared renewable
/// output is split between buildings, the per-class AC setpoints and the
/// peak-to-valley shift of schedulable load.
struct DispatchDecision {
  std::vector<double> pv_alloc;    // fractions, sum to 1
  std::vector<double> wind_alloc;  // fractions, sum to 1
  double setpoint_ordinary = 26.0;  // degC in [22, 30]
  double setpoint_special = 26.0;   // degC in [22, 30]
  double shift_fraction = 0.0;      // in [0, 1]

  /// Throws InfeasibleDecisionError when any invariant fails.
  void validate(int n_buildings) const;
};

/// The three objective values in canonical minimization sense.
struct ObjectiveVector {
  double equipment_cost = 0.0;  // f1, yuan
  double supply_cost = 0.0;     // f2, yuan
  double comfort_loss = 0.0;    // f3 = 1 - S_D, dimensionless

  [[nodiscard]] std::array<double, 3> as_array() const {
    return {equipment_cost, supply_cost, comfort_loss};
  }
};

/// Power totals of one slot, as they enter the balance equation.
struct SlotAggregates {
  double grid = 0.0;           // P_Jh, exchange with the grid
  double wind_used = 0.0;      // P_Fl actually generated/consumed
  double pv_used = 0.0;        // P_Gf actually generated/consumed
  double load_critical = 0.0;  // sum of P_Gj
  double load_sched = 0.0;     // sum of P_Kd after shifting
  double load_switch = 0.0;    // sum of P_Kq including AC draw
};

/// Full per-building usage breakdown of one slot, used by the TRR index.
struct SlotDispatch {
  SlotAggregates totals;
  std::vector<double> pv_used;    // per building
  std::vector<double> wind_used;  // per building
  std::vector<double> load;       // per building, all components
};

/// Grid tariff (yuan per kWh): 0.3 in the valley window [23:00, 06:00),
/// 0.7 in the peak window [06:00, 23:00).
double tariff_rate(TimeSlot slot);

[[nodiscard]] bool is_valley_slot(TimeSlot slot);

/// Occupant comfort S_D = 1 - |t_in - 26| * 0.25 for t_in in [22, 30].
/// Throws std::domain_error outside that range.
double comfort(double t_in_celsius);

/// Equipment cost w1 * sum(P0) + w2 * P_wm + l * P_c, with the
/// maintenance factor converted from yuan/kW to yuan/MW.
/// `wind_slot_sum` is the sum of the instantaneous wind samples over the
/// recorded slots, `wind_monthly_mean` the monthly mean wind power and
/// `pv_max` the maximum PV output.
double equipment_cost(const CostFactors& factors, double wind_slot_sum,
                      double wind_monthly_mean, double pv_max);

/// Monthly supply cost of a daily grid-draw series: positive draw per slot
/// times slot energy times the tariff, scaled to a 31-day month.
double supply_cost(const SlotSeries& grid_draw);

/// Trapezoidal integral of a daily series (MW) into MWh, treating the day
/// as periodic so the constant series integrates exactly.
double integrate_power(const SlotSeries& series);

/// Signed balance residual grid + wind + pv - (critical + sched + switch).
double balance_residual(const SlotAggregates& a);

/// Assembles the slot aggregates implied by a decision: allocated renewables
/// are used up to each building's load, the grid covers the remainder.
SlotDispatch dispatch_slot(const BuildingScenario& scenario,
                           const DispatchDecision& decision, TimeSlot slot);

/// Evaluation of a whole daily dispatch, kept so the TRR index and the
/// experiment reports can reuse the per-building usage series.
struct DispatchEvaluation {
  ObjectiveVector objectives;
  SlotSeries grid_draw;                          // per slot
  std::vector<SlotSeries> pv_used_per_building;  // [building][slot]
  std::vector<SlotSeries> wind_used_per_building;
  SlotSeries pv_used_total;
  SlotSeries wind_used_total;
};

/// Evaluates all three objectives of a decision. Pure: identical inputs give
/// bit-identical outputs. Throws InfeasibleDecisionError when the decision or
/// the implied slot balances are infeasible.
DispatchEvaluation evaluate_dispatch(const BuildingScenario& scenario,
                                     const DispatchDecision& decision);

ObjectiveVector evaluate_objectives(const BuildingScenario& scenario,
                                    const DispatchDecision& decision);

}  // namespace inbi

#endif  // INBI_CORE_MODEL_HPP
