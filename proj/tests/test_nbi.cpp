#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "inbi/nbi.hpp"
#include "oracles.hpp"

using namespace inbi;
using namespace inbi::nbi;

namespace {

/// min(x^2, (x-1)^2) on [0, 1]: the whole interval is Pareto-optimal.
moo::MooProblem parabola_pair() {
  moo::MooProblem p;
  p.dimension = 1;
  p.objectives = {
      [](const moo::DecisionVector& x) { return x[0] * x[0]; },
      [](const moo::DecisionVector& x) { return (x[0] - 1.0) * (x[0] - 1.0); }};
  p.lower = {0.0};
  p.upper = {1.0};
  return p;
}

/// Three quadratic bowls centred at triangle corners of [0, 1]^2.
moo::MooProblem corner_bowls() {
  const std::vector<std::vector<double>> centers = {
      {0.0, 0.0}, {1.0, 0.0}, {0.5, 1.0}};
  moo::MooProblem p;
  p.dimension = 2;
  for (const auto& c : centers) {
    p.objectives.push_back([c](const moo::DecisionVector& x) {
      return (x[0] - c[0]) * (x[0] - c[0]) + (x[1] - c[1]) * (x[1] - c[1]);
    });
  }
  p.lower = {0.0, 0.0};
  p.upper = {1.0, 1.0};
  return p;
}

NbiOptions fast_options(std::uint64_t seed, int divisions = 10) {
  NbiOptions opt;
  opt.divisions = divisions;
  opt.solver.seed = seed;
  opt.solver.max_evaluations = 3000;
  opt.solver.multistarts = 2;
  return opt;
}

FrontierSet tiny_frontier(const std::vector<std::vector<double>>& values) {
  FrontierSet f;
  for (const auto& v : values) {
    ParetoPoint p;
    p.values = v;
    p.normalized = v;
    f.points.push_back(std::move(p));
  }
  return f;
}

}  // namespace

TEST_CASE("simplex grid sizes") {
  CHECK(simplex_grid(2, 10).size() == 11);
  CHECK(simplex_grid(3, 10).size() == 66);
  CHECK(simplex_grid(3, 4).size() == 15);
  for (const auto& ticks : simplex_grid(3, 7)) {
    CHECK(ticks[0] + ticks[1] + ticks[2] == 7);
  }
  CHECK_THROWS_AS(simplex_grid(3, 1), std::invalid_argument);
}

TEST_CASE("bi-objective frontier lies on the analytic trade-off") {
  const auto problem = parabola_pair();
  const auto result = nbi_frontier(problem, fast_options(51));

  CHECK(result.subproblems_attempted == 11);
  CHECK(result.frontier.size() >= 3);
  for (const auto& p : result.frontier.points) {
    // on the curve sqrt(f1) + sqrt(f2) = 1
    const double sum = std::sqrt(p.values[0]) + std::sqrt(p.values[1]);
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(p.decision[0] >= 0.0);
    CHECK(p.decision[0] <= 1.0);
  }
}

TEST_CASE("tri-objective anchors are the bowl centres") {
  const auto problem = corner_bowls();
  const auto result = nbi_frontier(problem, fast_options(52, 6));

  const std::vector<std::vector<double>> centers = {
      {0.0, 0.0}, {1.0, 0.0}, {0.5, 1.0}};
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(std::abs(result.anchors.decisions[j][0] - centers[j][0]) <= 1e-3);
    CHECK(std::abs(result.anchors.decisions[j][1] - centers[j][1]) <= 1e-3);
  }
}

TEST_CASE("frontier is mutually non-dominated and keeps the anchors") {
  const auto problem = corner_bowls();
  const auto result = nbi_frontier(problem, fast_options(53, 6));
  const auto& points = result.frontier.points;

  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (i != j) CHECK_FALSE(dominates(points[i].values, points[j].values));
    }
  }

  // each anchor survives filtering
  for (std::size_t a = 0; a < 3; ++a) {
    bool found = false;
    for (const auto& p : points) {
      if (nearly_equal(p.values, result.anchors.objectives[a], 1e-9)) {
        found = true;
        break;
      }
    }
    CHECK(found);
  }

  CHECK(result.frontier.min_spacing > 0.0);
}

TEST_CASE("every frontier point is feasible") {
  auto problem = corner_bowls();
  problem.inequality_constraints.push_back(
      {[](const moo::DecisionVector& x) { return x[0] + x[1]; }, 0.1, 1.8});
  const auto result = nbi_frontier(problem, fast_options(54, 5));
  for (const auto& p : result.frontier.points) {
    CHECK(problem.constraint_violation(p.decision) <=
          moo::kConstraintTolerance);
  }
}

TEST_CASE("frontier approximates the brute-force front") {
  const auto problem = corner_bowls();
  const auto result = nbi_frontier(problem, fast_options(55));

  const auto oracle_front = oracles::brute_force_front(
      [&](const std::vector<double>& x) {
        return moo::evaluate_all(problem, x);
      },
      {0.0, 0.0}, {1.0, 1.0}, 150);

  // normalize both sides with the run's bounds
  std::vector<std::vector<double>> frontier_normalized;
  for (const auto& p : result.frontier.points) {
    frontier_normalized.push_back(p.normalized);
  }
  std::vector<std::vector<double>> oracle_normalized;
  for (const auto& v : oracle_front) {
    oracle_normalized.push_back(
        moo::normalize_objectives(v, result.frontier.bounds));
  }

  // every frontier point sits near the brute-force non-dominated set
  CHECK(directed_hausdorff(frontier_normalized, oracle_normalized) <= 1e-2);
}

TEST_CASE("degenerate runs raise hard errors") {
  // flat objectives: anchor bounds collapse
  moo::MooProblem flat;
  flat.dimension = 1;
  flat.objectives = {[](const moo::DecisionVector&) { return 1.0; },
                     [](const moo::DecisionVector&) { return 2.0; }};
  flat.lower = {0.0};
  flat.upper = {1.0};
  CHECK_THROWS(nbi_frontier(flat, fast_options(56)));
}

TEST_CASE("euclidean compromise picks the ideal point") {
  auto frontier = tiny_frontier({{0.0, 0.0, 0.0},
                                 {1.0, 1.0, 1.0},
                                 {0.5, 0.8, 0.9}});
  // first point coincides with the positive ideal
  const auto th = euclidean_closeness(frontier, {1.0, 1.0, 1.0});
  CHECK(th[0] == doctest::Approx(0.0));
  CHECK(th[1] == doctest::Approx(1.0));
  CHECK(euclidean_compromise(frontier, {1.0, 1.0, 1.0}) == 0);
}

TEST_CASE("euclidean compromise breaks symmetric ties to the lower index") {
  // a and b mirror each other in the first two objectives; the third is
  // weighted out, so both sit at the same closeness.
  auto frontier = tiny_frontier({{0.0, 1.0, 0.5},
                                 {1.0, 0.0, 0.5},
                                 {1.0, 1.0, 1.0},
                                 {0.2, 0.9, 0.0}});
  const std::array<double, 3> weights{1.0, 1.0, 0.0};
  const auto th = euclidean_closeness(frontier, weights);
  CHECK(th[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(th[0] == doctest::Approx(th[1]).epsilon(1e-12));
  CHECK(th[2] > 0.5);
  CHECK(th[3] > 0.5);
  CHECK(euclidean_compromise(frontier, weights) == 0);
}

TEST_CASE("closeness matches a direct recomputation on 5 points") {
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::vector<double>> values;
  for (int i = 0; i < 5; ++i) {
    values.push_back({unit(rng), unit(rng), unit(rng)});
  }
  auto frontier = tiny_frontier(values);
  const std::array<double, 3> w{0.4, 0.3, 0.3};
  const auto th = euclidean_closeness(frontier, w);

  // direct recomputation of the whole chain
  std::array<double, 3> lo{}, hi{};
  for (int j = 0; j < 3; ++j) {
    lo[j] = hi[j] = values[0][j];
    for (const auto& v : values) {
      lo[j] = std::min(lo[j], v[j]);
      hi[j] = std::max(hi[j], v[j]);
    }
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::array<double, 3> u{};
    for (int j = 0; j < 3; ++j) {
      u[j] = (values[i][j] - lo[j]) / (hi[j] - lo[j]);
    }
    // column ideals in set-normalized space are 0 and 1 by construction
    double dp = 0.0, dm = 0.0;
    for (int j = 0; j < 3; ++j) {
      dp += w[j] * u[j] * w[j] * u[j];
      dm += w[j] * (u[j] - 1.0) * w[j] * (u[j] - 1.0);
    }
    dp = std::sqrt(dp);
    dm = std::sqrt(dm);
    CHECK(th[i] == doctest::Approx(dp / (dp + dm)).epsilon(1e-12));
  }
}
