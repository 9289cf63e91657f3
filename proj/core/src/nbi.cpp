#include "inbi/nbi.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "inbi/rng.hpp"

namespace inbi::nbi {

namespace {

/// Single-entry cache of normalized objective values. Each subproblem owns
/// one, so the travel objective and its on-normal equality constraints share
/// one model evaluation per candidate point.
struct NormalizedEvaluator {
  const moo::MooProblem* problem;
  moo::NormalizationBounds bounds;
  mutable moo::DecisionVector last_x;
  mutable std::vector<double> last_s;

  const std::vector<double>& operator()(const moo::DecisionVector& x) const {
    if (x != last_x) {
      last_s = moo::normalize_objectives(moo::evaluate_all(*problem, x), bounds);
      last_x = x;
    }
    return last_s;
  }
};

}  // namespace

std::vector<std::vector<int>> simplex_grid(std::size_t k, int divisions) {
  if (k < 2 || k > 3) throw std::invalid_argument("expected 2 or 3 parts");
  if (divisions < 2) throw std::invalid_argument("divisions must be >= 2");
  std::vector<std::vector<int>> grid;
  if (k == 2) {
    for (int i = 0; i <= divisions; ++i) {
      grid.push_back({i, divisions - i});
    }
  } else {
    for (int i = 0; i <= divisions; ++i) {
      for (int j = 0; j <= divisions - i; ++j) {
        grid.push_back({i, j, divisions - i - j});
      }
    }
  }
  return grid;
}

NbiResult nbi_frontier(const moo::MooProblem& problem,
                       const NbiOptions& options) {
  problem.validate();
  const std::size_t k = problem.objective_count();

  NbiResult result;

  moo::ScalarSolverOptions anchor_opt = options.solver;
  anchor_opt.seed = derive_seed(options.solver.seed, 0x6e62692d616eULL);
  result.anchors = moo::anchor_solutions(problem, anchor_opt);
  const moo::NormalizationBounds& bounds = result.anchors.bounds;

  // Normalized payoff matrix: row a is anchor a in normalized space.
  std::vector<std::vector<double>> anchor_s(k);
  for (std::size_t a = 0; a < k; ++a) {
    anchor_s[a] =
        moo::normalize_objectives(result.anchors.objectives[a], bounds);
  }

  // Quasi-normal: from the anchor simplex toward the origin.
  std::vector<double> direction(k, 0.0);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t j = 0; j < k; ++j) direction[j] -= anchor_s[a][j];
  }
  double norm = 0.0;
  for (double d : direction) norm += d * d;
  norm = std::sqrt(norm);
  if (norm == 0.0) {
    throw std::runtime_error("degenerate anchor simplex: zero quasi-normal");
  }
  for (double& d : direction) d /= norm;

  std::vector<ParetoPoint> points;

  // Anchors are Pareto-optimal by construction; seed the set with them.
  for (std::size_t a = 0; a < k; ++a) {
    ParetoPoint p;
    p.decision = result.anchors.decisions[a];
    p.values = result.anchors.objectives[a];
    p.normalized = anchor_s[a];
    p.source = PointSource::kNbi;
    points.push_back(std::move(p));
  }

  const auto grid = simplex_grid(k, options.divisions);
  std::uint64_t subproblem_tag = 0;
  for (const auto& ticks : grid) {
    ++subproblem_tag;
    ++result.subproblems_attempted;

    std::vector<double> w(k);
    for (std::size_t a = 0; a < k; ++a) {
      w[a] = static_cast<double>(ticks[a]) / options.divisions;
    }

    // Point on the convex hull of individual minima for this weight.
    std::vector<double> chim(k, 0.0);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t j = 0; j < k; ++j) chim[j] += w[a] * anchor_s[a][j];
    }

    auto evaluator = std::make_shared<NormalizedEvaluator>();
    evaluator->problem = &problem;
    evaluator->bounds = bounds;

    const auto travel = [evaluator, chim,
                         direction](const moo::DecisionVector& x) {
      const auto& s = (*evaluator)(x);
      double t = 0.0;
      for (std::size_t j = 0; j < s.size(); ++j) {
        t += direction[j] * (s[j] - chim[j]);
      }
      return t;
    };

    moo::MooProblem sub = problem;
    for (std::size_t j = 0; j < k; ++j) {
      sub.equality_constraints.push_back(
          [evaluator, chim, direction, travel, j](const moo::DecisionVector& x) {
            const auto& s = (*evaluator)(x);
            const double t = travel(x);
            return s[j] - chim[j] - t * direction[j];
          });
    }

    // Warm start from the matching mixture of anchor decisions.
    moo::DecisionVector start(problem.dimension, 0.0);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t i = 0; i < problem.dimension; ++i) {
        start[i] += w[a] * result.anchors.decisions[a][i];
      }
    }

    moo::ScalarSolverOptions sub_opt = options.solver;
    sub_opt.seed = derive_seed(options.solver.seed, 0x6e6269ULL, subproblem_tag);

    const auto report = moo::solve_scalar(
        sub, [travel](const moo::DecisionVector& x) { return -travel(x); },
        start, sub_opt);

    if (!report.converged) {
      ++result.subproblems_skipped;
      result.warnings.push_back("subproblem " +
                                std::to_string(subproblem_tag) +
                                " did not converge; grid point skipped");
      continue;
    }
    if (problem.constraint_violation(report.solution) >
        moo::kConstraintTolerance) {
      ++result.subproblems_skipped;
      result.warnings.push_back("subproblem " +
                                std::to_string(subproblem_tag) +
                                " violates constraints; grid point skipped");
      continue;
    }

    ParetoPoint p;
    p.decision = report.solution;
    p.values = moo::evaluate_all(problem, report.solution);
    p.normalized = moo::normalize_objectives(p.values, bounds);
    p.source = PointSource::kNbi;
    points.push_back(std::move(p));
  }

  points = deduplicate(std::move(points), options.duplicate_tolerance);
  points = filter_dominated(std::move(points));

  if (points.size() < 3) {
    throw std::runtime_error("NBI frontier degenerated to fewer than 3 points");
  }

  result.frontier.points = std::move(points);
  result.frontier.bounds = bounds;
  result.frontier.min_spacing = min_pairwise_spacing(result.frontier.points);
  result.frontier.covariance = estimate_covariance(result.frontier.points);
  return result;
}

std::vector<double> euclidean_closeness(const FrontierSet& frontier,
                                        const std::array<double, 3>& weights) {
  const std::size_t n = frontier.points.size();
  if (n == 0) throw std::invalid_argument("empty frontier");
  const std::size_t k = frontier.points[0].values.size();

  // Evaluation matrix normalized over the set itself.
  std::vector<double> lo(k), hi(k);
  for (std::size_t j = 0; j < k; ++j) {
    lo[j] = hi[j] = frontier.points[0].values[j];
    for (std::size_t i = 1; i < n; ++i) {
      lo[j] = std::min(lo[j], frontier.points[i].values[j]);
      hi[j] = std::max(hi[j], frontier.points[i].values[j]);
    }
    if (!(hi[j] > lo[j])) {
      throw std::domain_error("objective " + std::to_string(j) +
                              " is flat over the set");
    }
  }
  std::vector<std::vector<double>> u(n, std::vector<double>(k));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      u[i][j] = (frontier.points[i].values[j] - lo[j]) / (hi[j] - lo[j]);
    }
  }

  // Ideal points: all objectives are minimized, so plus = column minimum.
  std::vector<double> u_plus(k), u_minus(k);
  for (std::size_t j = 0; j < k; ++j) {
    u_plus[j] = u[0][j];
    u_minus[j] = u[0][j];
    for (std::size_t i = 1; i < n; ++i) {
      u_plus[j] = std::min(u_plus[j], u[i][j]);
      u_minus[j] = std::max(u_minus[j], u[i][j]);
    }
  }

  std::vector<double> closeness(n);
  for (std::size_t i = 0; i < n; ++i) {
    double d_plus_sq = 0.0;
    double d_minus_sq = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      const double vp = weights[j] * (u[i][j] - u_plus[j]);
      d_plus_sq += vp * vp;
      const double vm = weights[j] * (u[i][j] - u_minus[j]);
      d_minus_sq += vm * vm;
    }
    const double d_plus = std::sqrt(d_plus_sq);
    const double d_minus = std::sqrt(d_minus_sq);
    if (d_plus + d_minus == 0.0) {
      throw std::domain_error("all points coincide; closeness undefined");
    }
    closeness[i] = d_plus / (d_plus + d_minus);
  }
  return closeness;
}

std::size_t euclidean_compromise(const FrontierSet& frontier,
                                 const std::array<double, 3>& weights) {
  const auto th = euclidean_closeness(frontier, weights);
  std::size_t best = 0;
  for (std::size_t i = 1; i < th.size(); ++i) {
    if (th[i] < th[best]) best = i;
  }
  return best;
}

}  // namespace inbi::nbi
