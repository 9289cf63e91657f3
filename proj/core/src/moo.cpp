#include "inbi/moo.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "inbi/rng.hpp"

namespace inbi::moo {

namespace {

double clamp_to_box(double v, double lo, double hi) {
  return std::min(std::max(v, lo), hi);
}

/// Quadratic exterior penalty of all constraint violations.
double violation_squares(const MooProblem& p, const DecisionVector& x) {
  double sum = 0.0;
  for (const auto& h : p.equality_constraints) {
    const double v = h(x);
    sum += v * v;
  }
  for (const auto& g : p.inequality_constraints) {
    const double v = g.fn(x);
    const double below = std::max(g.lower - v, 0.0);
    const double above = std::max(v - g.upper, 0.0);
    sum += below * below + above * above;
  }
  return sum;
}

struct StartResult {
  DecisionVector x;
  double value = 0.0;  // objective + scalar penalty, no constraint penalty
  double violation = 0.0;
  bool converged = false;
  int evaluations = 0;
};

/// One compass-search descent of the penalized objective from `x0`.
/// Returns the best point found and whether the search reached pattern
/// stationarity (mesh below tolerance or a full poll without improvement).
StartResult run_start(const MooProblem& problem, const ScalarFn& objective,
                      DecisionVector x0, const ScalarSolverOptions& opt) {
  const std::size_t dim = problem.dimension;
  const bool constrained = !problem.equality_constraints.empty() ||
                           !problem.inequality_constraints.empty();
  const int rounds = constrained ? std::max(opt.penalty_rounds, 1) : 1;
  const int evals_per_round = std::max(opt.max_evaluations / rounds, 8);

  std::vector<double> range(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    range[i] = problem.upper[i] - problem.lower[i];
    x0[i] = clamp_to_box(x0[i], problem.lower[i], problem.upper[i]);
  }

  const auto base_value = [&](const DecisionVector& x) {
    double v = objective(x);
    if (problem.scalar_penalty) v += problem.scalar_penalty(x);
    return v;
  };

  StartResult result;
  result.x = x0;
  bool stationary = false;

  double mu = opt.penalty_initial;
  for (int round = 0; round < rounds; ++round) {
    const auto penalized = [&](const DecisionVector& x) {
      double v = base_value(x);
      if (constrained) v += mu * violation_squares(problem, x);
      return v;
    };

    // Later rounds start from a warm point, so begin with a finer mesh.
    double mesh = round == 0 ? opt.initial_mesh : opt.initial_mesh * 0.1;
    const double mesh0 = mesh;

    DecisionVector x = result.x;
    double fx = penalized(x);
    int evals = 1;
    stationary = false;

    // Opportunistic compass poll: accept the first improving neighbour,
    // remembering the successful direction for the next poll. The mesh
    // grows only on repeated success along one direction, so valley
    // zigzags do not keep re-coarsening it.
    std::size_t start_dir = 0;
    const int tail_start = evals_per_round - evals_per_round / 4;
    const double round_initial = fx;
    double tail_reference = fx;
    bool tail_seen = false;
    DecisionVector candidate = x;
    while (mesh >= opt.mesh_tolerance && evals < evals_per_round) {
      if (!tail_seen && evals >= tail_start) {
        tail_reference = fx;
        tail_seen = true;
      }
      bool improved = false;
      bool poll_truncated = false;
      for (std::size_t offset = 0; offset < dim * 2; ++offset) {
        if (evals >= evals_per_round) {
          poll_truncated = true;
          break;
        }
        const std::size_t d = (start_dir + offset) % (dim * 2);
        const std::size_t i = d / 2;
        const double sign = (d % 2 == 0) ? 1.0 : -1.0;
        const double moved = clamp_to_box(x[i] + sign * mesh * range[i],
                                          problem.lower[i], problem.upper[i]);
        if (moved == x[i]) continue;
        candidate = x;
        candidate[i] = moved;
        const double f = penalized(candidate);
        ++evals;
        if (f < fx) {
          if (d == start_dir) mesh = std::min(mesh * 2.0, mesh0);
          x[i] = moved;
          fx = f;
          start_dir = d;
          improved = true;
          break;
        }
      }

      if (improved) {
        stationary = false;
      } else if (!poll_truncated) {
        // A full poll at this mesh found nothing better.
        stationary = true;
        mesh *= 0.5;
      }
    }
    if (mesh < opt.mesh_tolerance) stationary = true;
    // A budget-bound search whose tail contributed almost nothing relative
    // to the round's own progress has stalled for practical purposes.
    if (!stationary && tail_seen) {
      const double total_progress = round_initial - fx;
      const double tail_progress = tail_reference - fx;
      if (tail_progress <= 1e-4 * total_progress) stationary = true;
    }

    result.x = x;
    result.evaluations += evals;
    mu *= opt.penalty_growth;
  }

  result.value = base_value(result.x);
  result.violation = std::sqrt(violation_squares(problem, result.x));
  result.converged = stationary;
  return result;
}

bool better_start(const StartResult& a, const StartResult& b) {
  const bool a_feasible = a.violation <= kConstraintTolerance;
  const bool b_feasible = b.violation <= kConstraintTolerance;
  if (a_feasible != b_feasible) return a_feasible;
  if (a.value != b.value) return a.value < b.value;
  return std::lexicographical_compare(a.x.begin(), a.x.end(), b.x.begin(),
                                      b.x.end());
}

}  // namespace

void MooProblem::validate() const {
  if (dimension == 0) throw std::invalid_argument("dimension must be > 0");
  if (objectives.size() < 2 || objectives.size() > 3) {
    throw std::invalid_argument("expected 2 or 3 objectives");
  }
  if (lower.size() != dimension || upper.size() != dimension) {
    throw std::invalid_argument("box bounds must match the dimension");
  }
  for (std::size_t i = 0; i < dimension; ++i) {
    if (!(lower[i] < upper[i])) {
      throw std::invalid_argument("box bounds must satisfy lower < upper");
    }
  }
}

double MooProblem::constraint_violation(const DecisionVector& x) const {
  double worst = 0.0;
  for (const auto& h : equality_constraints) {
    worst = std::max(worst, std::abs(h(x)));
  }
  for (const auto& g : inequality_constraints) {
    const double v = g.fn(x);
    worst = std::max({worst, g.lower - v, v - g.upper});
  }
  return worst;
}

void NormalizationBounds::validate() const {
  if (f_min.size() != f_max.size() || f_min.empty()) {
    throw std::invalid_argument("normalization bounds size mismatch");
  }
  for (std::size_t j = 0; j < f_min.size(); ++j) {
    if (!(f_max[j] > f_min[j])) {
      throw std::invalid_argument(
          "degenerate normalization bounds: objective " + std::to_string(j) +
          " is flat");
    }
  }
}

std::vector<double> normalize_objectives(const std::vector<double>& values,
                                         const NormalizationBounds& bounds) {
  bounds.validate();
  if (values.size() != bounds.f_min.size()) {
    throw std::invalid_argument("value count does not match bounds");
  }
  std::vector<double> s(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) {
    s[j] = (values[j] - bounds.f_min[j]) / (bounds.f_max[j] - bounds.f_min[j]);
  }
  return s;
}

ScalarSolveReport solve_scalar(const MooProblem& problem,
                               const ScalarFn& objective,
                               const DecisionVector& start,
                               const ScalarSolverOptions& options) {
  problem.validate();
  if (start.size() != problem.dimension) {
    throw std::invalid_argument("start point dimension mismatch");
  }

  std::vector<StartResult> results;
  results.reserve(options.multistarts);
  int total_evals = 0;

  for (int s = 0; s < std::max(options.multistarts, 1); ++s) {
    DecisionVector x0 = start;
    if (s > 0) {
      std::mt19937_64 rng(derive_seed(options.seed, 0x5374617274ULL,
                                      static_cast<std::uint64_t>(s)));
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      for (std::size_t i = 0; i < problem.dimension; ++i) {
        x0[i] = problem.lower[i] +
                unit(rng) * (problem.upper[i] - problem.lower[i]);
      }
    }
    results.push_back(run_start(problem, objective, std::move(x0), options));
    total_evals += results.back().evaluations;
  }

  const auto best = std::min_element(
      results.begin(), results.end(),
      [](const StartResult& a, const StartResult& b) {
        return better_start(a, b);
      });

  ScalarSolveReport report;
  report.solution = best->x;
  report.value = best->value;
  report.converged = best->converged;
  report.iterations = total_evals;
  return report;
}

std::vector<double> evaluate_all(const MooProblem& problem,
                                 const DecisionVector& x) {
  std::vector<double> values(problem.objective_count());
  for (std::size_t j = 0; j < values.size(); ++j) {
    values[j] = problem.objectives[j](x);
  }
  return values;
}

AnchorSet anchor_solutions(const MooProblem& problem,
                           const ScalarSolverOptions& options) {
  problem.validate();
  const std::size_t k = problem.objective_count();

  DecisionVector midpoint(problem.dimension);
  for (std::size_t i = 0; i < problem.dimension; ++i) {
    midpoint[i] = 0.5 * (problem.lower[i] + problem.upper[i]);
  }

  AnchorSet anchors;
  anchors.decisions.resize(k);
  anchors.objectives.resize(k);

  for (std::size_t j = 0; j < k; ++j) {
    ScalarSolverOptions opt = options;
    opt.seed = derive_seed(options.seed, 0x416e63686f72ULL,
                           static_cast<std::uint64_t>(j));
    const auto report =
        solve_scalar(problem, problem.objectives[j], midpoint, opt);
    if (!report.converged) {
      throw std::runtime_error("anchor solve for objective " +
                               std::to_string(j) + " did not converge");
    }
    anchors.decisions[j] = report.solution;
    anchors.objectives[j] = evaluate_all(problem, report.solution);
  }

  anchors.bounds.f_min.assign(k, 0.0);
  anchors.bounds.f_max.assign(k, 0.0);
  for (std::size_t j = 0; j < k; ++j) {
    double lo = anchors.objectives[0][j];
    double hi = anchors.objectives[0][j];
    for (std::size_t a = 1; a < k; ++a) {
      lo = std::min(lo, anchors.objectives[a][j]);
      hi = std::max(hi, anchors.objectives[a][j]);
    }
    anchors.bounds.f_min[j] = lo;
    anchors.bounds.f_max[j] = hi;
  }
  anchors.bounds.validate();
  return anchors;
}

}  // namespace inbi::moo
