#include "inbi/building_problem.hpp"

#include <cmath>
#include <stdexcept>

namespace inbi::building {

DispatchDecision decode_decision(const BuildingScenario& scenario,
                                 const moo::DecisionVector& x) {
  const std::size_t n = static_cast<std::size_t>(scenario.building_count());
  if (x.size() != 2 * n + 3) {
    throw std::invalid_argument("decision vector has wrong dimension");
  }

  DispatchDecision d;
  d.pv_alloc.resize(n);
  d.wind_alloc.resize(n);

  double pv_sum = 0.0;
  double wind_sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    pv_sum += x[j];
    wind_sum += x[n + j];
  }
  if (!(pv_sum > 0.0) || !(wind_sum > 0.0)) {
    throw std::invalid_argument("allocation weights must have a positive sum");
  }
  for (std::size_t j = 0; j < n; ++j) {
    d.pv_alloc[j] = x[j] / pv_sum;
    d.wind_alloc[j] = x[n + j] / wind_sum;
  }

  d.setpoint_ordinary = x[2 * n];
  d.setpoint_special = x[2 * n + 1];
  d.shift_fraction = x[2 * n + 2];
  return d;
}

moo::DecisionVector encode_decision(const BuildingScenario& scenario,
                                    const DispatchDecision& decision) {
  const std::size_t n = static_cast<std::size_t>(scenario.building_count());
  decision.validate(static_cast<int>(n));
  moo::DecisionVector x(2 * n + 3);
  for (std::size_t j = 0; j < n; ++j) {
    x[j] = decision.pv_alloc[j];
    x[n + j] = decision.wind_alloc[j];
  }
  x[2 * n] = decision.setpoint_ordinary;
  x[2 * n + 1] = decision.setpoint_special;
  x[2 * n + 2] = decision.shift_fraction;
  return x;
}

BuildingProblem::BuildingProblem(BuildingScenario scenario,
                                 BuildingProblemOptions options)
    : scenario_(std::move(scenario)), options_(options) {
  scenario_.validate();
  if (options_.trr_enabled) options_.trr_params.validate();
  if (!(options_.min_alloc_weight > 0.0)) {
    throw std::invalid_argument("min_alloc_weight must be > 0");
  }
}

const DispatchEvaluation& BuildingProblem::evaluate(
    const moo::DecisionVector& x) const {
  if (x != cached_x_) {
    cached_eval_ = evaluate_dispatch(scenario_, decode_decision(scenario_, x));
    cached_x_ = x;
  }
  return cached_eval_;
}

moo::MooProblem BuildingProblem::as_moo_problem() const {
  const std::size_t n = static_cast<std::size_t>(scenario_.building_count());

  moo::MooProblem p;
  p.dimension = 2 * n + 3;
  p.lower.assign(p.dimension, options_.min_alloc_weight);
  p.upper.assign(p.dimension, 1.0);
  p.lower[2 * n] = 22.0;
  p.upper[2 * n] = 30.0;
  p.lower[2 * n + 1] = 22.0;
  p.upper[2 * n + 1] = 30.0;
  p.lower[2 * n + 2] = 0.0;
  p.upper[2 * n + 2] = 1.0;

  p.objectives = {
      [this](const moo::DecisionVector& x) {
        return evaluate(x).objectives.equipment_cost;
      },
      [this](const moo::DecisionVector& x) {
        return evaluate(x).objectives.supply_cost;
      },
      [this](const moo::DecisionVector& x) {
        return evaluate(x).objectives.comfort_loss;
      },
  };

  if (options_.trr_enabled && options_.lambda_trr > 0.0) {
    p.scalar_penalty = [this](const moo::DecisionVector& x) {
      return trr::trr_penalty(evaluate(x), options_.trr_params,
                              options_.lambda_trr);
    };
  }
  return p;
}

moo::MooProblem make_building_problem(BuildingScenario scenario,
                                      const BuildingProblemOptions& options) {
  auto shared =
      std::make_shared<BuildingProblem>(std::move(scenario), options);

  moo::MooProblem p = shared->as_moo_problem();
  // Rebind the closures to the shared instance so the problem owns it.
  p.objectives = {
      [shared](const moo::DecisionVector& x) {
        return shared->evaluate(x).objectives.equipment_cost;
      },
      [shared](const moo::DecisionVector& x) {
        return shared->evaluate(x).objectives.supply_cost;
      },
      [shared](const moo::DecisionVector& x) {
        return shared->evaluate(x).objectives.comfort_loss;
      },
  };
  if (p.scalar_penalty) {
    const BuildingProblemOptions opt = options;
    p.scalar_penalty = [shared, opt](const moo::DecisionVector& x) {
      return trr::trr_penalty(shared->evaluate(x), opt.trr_params,
                              opt.lambda_trr);
    };
  }
  return p;
}

}  // namespace inbi::building
