#ifndef INBI_BUILDING_PROBLEM_HPP
#define INBI_BUILDING_PROBLEM_HPP

#include <memory>

#include "inbi/core_model.hpp"
#include "inbi/moo.hpp"
#include "inbi/trr.hpp"

/// Bridges the smart-building scenario into the generic problem abstraction:
/// decision-vector encoding, the three objective closures and the optional
/// TRR boundary-condition penalty.
namespace inbi::building {

struct BuildingProblemOptions {
  bool trr_enabled = false;
  double lambda_trr = 1.0;
  trr::TrrParams trr_params;
  /// Floor of the raw allocation weights; keeps the normalizing sum positive.
  double min_alloc_weight = 0.05;
};

/// Layout of the decision vector:
///   [0, n)      raw PV allocation weights  (normalized to fractions)
///   [n, 2n)     raw wind allocation weights
///   [2n]        ordinary-class setpoint (degC)
///   [2n + 1]    special-class setpoint (degC)
///   [2n + 2]    shift fraction
/// Allocation weights are normalized by their sum, so every vector inside
/// the box maps to a feasible DispatchDecision.
DispatchDecision decode_decision(const BuildingScenario& scenario,
                                 const moo::DecisionVector& x);

moo::DecisionVector encode_decision(const BuildingScenario& scenario,
                                    const DispatchDecision& decision);

/// The shared scenario + dispatch cache behind one problem's closures.
/// Closures of one problem instance reuse a single-slot evaluation cache;
/// they are not safe to call concurrently from multiple threads.
class BuildingProblem {
 public:
  BuildingProblem(BuildingScenario scenario, BuildingProblemOptions options);

  [[nodiscard]] const BuildingScenario& scenario() const { return scenario_; }
  [[nodiscard]] const BuildingProblemOptions& options() const {
    return options_;
  }

  /// Objectives, box bounds and (when enabled) the TRR scalar penalty,
  /// all sharing this instance's cache.
  [[nodiscard]] moo::MooProblem as_moo_problem() const;

  [[nodiscard]] const DispatchEvaluation& evaluate(
      const moo::DecisionVector& x) const;

 private:
  BuildingScenario scenario_;
  BuildingProblemOptions options_;

  mutable moo::DecisionVector cached_x_;
  mutable DispatchEvaluation cached_eval_;
};

/// Convenience factory; the returned problem keeps the BuildingProblem alive
/// through its closures.
moo::MooProblem make_building_problem(BuildingScenario scenario,
                                      const BuildingProblemOptions& options);

}  // namespace inbi::building

#endif  // INBI_BUILDING_PROBLEM_HPP
