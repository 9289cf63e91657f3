#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "inbi/aws.hpp"
#include "inbi/nbi.hpp"
#include "oracles.hpp"

using namespace inbi;
using namespace inbi::aws;

namespace {

FrontierSet frontier_from_normalized(
    const std::vector<std::vector<double>>& normalized, double d_set) {
  FrontierSet f;
  for (const auto& s : normalized) {
    ParetoPoint p;
    p.values = s;
    p.normalized = s;
    p.decision = {0.5, 0.5};
    f.points.push_back(std::move(p));
  }
  f.min_spacing = d_set;
  return f;
}

/// Convex tri-objective toy on [0,1]^2 whose frontier projections are dense
/// curves: quadratic bowls at triangle corners.
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

}  // namespace

TEST_CASE("thresholds satisfy the right-triangle relation") {
  const auto th = thresholds_from_spacing(0.07);
  CHECK(th.delta_q == doctest::Approx(0.14).epsilon(1e-12));
  CHECK(std::sqrt(th.delta_m * th.delta_m + th.delta_n * th.delta_n) ==
        doctest::Approx(th.delta_q).epsilon(1e-12));
  CHECK(th.delta_m == th.delta_n);
  CHECK_THROWS_AS(thresholds_from_spacing(0.0), std::invalid_argument);
}

TEST_CASE("uniform spacing at exactly d_set yields no segments") {
  std::vector<std::vector<double>> pts;
  for (int i = 0; i <= 10; ++i) {
    pts.push_back({0.1 * i, 1.0 - 0.1 * i, 0.5});
  }
  // consecutive spacing is ~0.141; delta_q with d_set = spacing is twice that
  const double spacing = std::hypot(0.1, 0.1);
  const auto f = frontier_from_normalized(pts, spacing);
  const auto segments = sparse_segments(f, coordinate_planes()[0], spacing);
  CHECK(segments.empty());
}

TEST_CASE("a gap of 2.5 delta_q refines with omega 2") {
  const double d_set = 0.05;
  const double delta_q = 2.0 * d_set;
  // two points separated by 2.5 delta_q along the abscissa
  std::vector<std::vector<double>> pts = {
      {0.0, 1.0, 0.3}, {2.5 * delta_q, 1.0 - 2.5 * delta_q, 0.6}};
  // hand ceil: ceil(2.5 * delta_q * sqrt(2) / delta_q) - 1
  const double gap = std::hypot(2.5 * delta_q, 2.5 * delta_q);
  const int expected_omega = static_cast<int>(std::ceil(gap / delta_q)) - 1;

  const auto f = frontier_from_normalized(pts, d_set);
  const auto segments = sparse_segments(f, coordinate_planes()[0], d_set);
  REQUIRE(segments.size() == 1);
  CHECK(segments[0].refinement_count == expected_omega);
  CHECK(segments[0].length == doctest::Approx(gap).epsilon(1e-12));

  // endpoint naming: P_a carries the larger abscissa, P_b the larger ordinate
  CHECK(segments[0].endpoint_a[0] == doctest::Approx(2.5 * delta_q));
  CHECK(segments[0].endpoint_b[1] == doctest::Approx(1.0));
}

TEST_CASE("a gap of exactly delta_q is excluded") {
  const double d_set = 0.05;
  const double delta_q = 2.0 * d_set;
  std::vector<std::vector<double>> pts = {{0.0, 0.5, 0.1},
                                          {delta_q, 0.5, 0.9}};
  const auto f = frontier_from_normalized(pts, d_set);
  const auto segments = sparse_segments(f, coordinate_planes()[0], d_set);
  CHECK(segments.empty());
}

TEST_CASE("refinement count is capped by the weight-step floor") {
  const double d_set = 1e-4;
  std::vector<std::vector<double>> pts = {{0.0, 1.0, 0.2}, {1.0, 0.0, 0.8}};
  const auto f = frontier_from_normalized(pts, d_set);
  const auto segments =
      sparse_segments(f, coordinate_planes()[0], d_set, 100);
  REQUIRE(segments.size() == 1);
  CHECK(segments[0].refinement_count == 100);
}

TEST_CASE("degenerate weight grids reduce to single-objective solves") {
  const auto problem = corner_bowls();
  nbi::NbiOptions nbi_opt;
  nbi_opt.divisions = 4;
  nbi_opt.solver.seed = 61;
  const auto base = nbi::nbi_frontier(problem, nbi_opt);

  // Build one artificial wide segment on the xoy plane.
  SparseSegment segment;
  segment.endpoint_a = {0.9, 0.1};
  segment.endpoint_b = {0.1, 0.9};
  segment.index_a = 0;
  segment.index_b = 1;
  segment.length = std::hypot(0.8, 0.8);
  segment.refinement_count = 1;  // lambda grid {0, 1}

  const auto th = thresholds_from_spacing(0.05);
  AwsOptions options;
  options.solver.seed = 62;
  const auto corrected = aws_refine(problem, segment, coordinate_planes()[0],
                                    base.anchors.bounds, th, options);

  // lambda 0 minimizes the ordinate objective alone, lambda 1 the abscissa
  // objective alone, both under the offset caps.
  for (const auto& cp : corrected) {
    if (cp.lambda == 0.0) {
      CHECK(cp.plane_values[1] <= segment.endpoint_b[1] - th.delta_n + 1e-6);
    } else if (cp.lambda == 1.0) {
      CHECK(cp.plane_values[0] <= segment.endpoint_a[0] - th.delta_m + 1e-6);
    }
  }
  CHECK(corrected.size() >= 1);
}

TEST_CASE("refinement closes a bi-objective gap below delta_q") {
  // min(x^2, (x-1)^2): points at x = 0, 0.1, 0.9, 1 leave one wide gap in
  // the middle of the normalized front.
  moo::MooProblem p;
  p.dimension = 1;
  p.objectives = {
      [](const moo::DecisionVector& x) { return x[0] * x[0]; },
      [](const moo::DecisionVector& x) { return (x[0] - 1.0) * (x[0] - 1.0); }};
  p.lower = {0.0};
  p.upper = {1.0};

  moo::NormalizationBounds bounds;
  bounds.f_min = {0.0, 0.0};
  bounds.f_max = {1.0, 1.0};

  FrontierSet frontier;
  frontier.bounds = bounds;
  for (const double x : {0.0, 0.1, 0.9, 1.0}) {
    ParetoPoint pt;
    pt.decision = {x};
    pt.values = {x * x, (x - 1.0) * (x - 1.0)};
    pt.normalized = pt.values;
    frontier.points.push_back(pt);
  }
  frontier.min_spacing = min_pairwise_spacing(frontier.points);

  const PlaneSpec plane{PlaneId::kXoy, 0, 1};
  const auto segments =
      sparse_segments(frontier, plane, frontier.min_spacing);
  REQUIRE(segments.size() == 1);
  CHECK(segments[0].refinement_count == 2);

  const auto th = thresholds_from_spacing(frontier.min_spacing);
  AwsOptions options;
  options.solver.seed = 63;
  const auto corrected =
      aws_refine(p, segments[0], plane, bounds, th, options, {0.5});
  REQUIRE(corrected.size() == 3);

  // offset constraints exclude the endpoints themselves
  for (const auto& cp : corrected) {
    CHECK(cp.plane_values[0] <=
          segments[0].endpoint_a[0] - th.delta_m + 1e-6);
    CHECK(cp.plane_values[1] <=
          segments[0].endpoint_b[1] - th.delta_n + 1e-6);
  }

  // spacing oracle: endpoints plus corrections, sorted along the abscissa,
  // leave no consecutive gap beyond delta_q
  std::vector<std::array<double, 2>> chain{segments[0].endpoint_b};
  for (const auto& cp : corrected) chain.push_back(cp.plane_values);
  chain.push_back(segments[0].endpoint_a);
  std::sort(chain.begin(), chain.end());
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const double gap =
        std::hypot(chain[i + 1][0] - chain[i][0], chain[i + 1][1] - chain[i][1]);
    CHECK(gap <= th.delta_q + 1e-6);
  }
}

TEST_CASE("densify only adds points on the convex toy") {
  const auto problem = corner_bowls();
  nbi::NbiOptions nbi_opt;
  nbi_opt.divisions = 5;
  nbi_opt.solver.seed = 63;
  const auto base = nbi::nbi_frontier(problem, nbi_opt);

  AwsOptions options;
  options.solver.seed = 64;
  const auto dense = densify_frontier(problem, base.frontier, options);

  CHECK(dense.frontier.size() >= base.frontier.size());
  CHECK(dense.lifted_accepted + dense.lifted_rejected ==
        static_cast<int>(dense.records.size()));

  // every lifted point passes the original constraint suite and is tagged
  int lifted = 0;
  for (const auto& p : dense.frontier.points) {
    if (p.source == PointSource::kAwsLifted) {
      ++lifted;
      CHECK(problem.constraint_violation(p.decision) <=
            moo::kConstraintTolerance);
    }
  }
  CHECK(lifted > 0);

  // the merged set stays mutually non-dominated
  for (std::size_t i = 0; i < dense.frontier.points.size(); ++i) {
    for (std::size_t j = 0; j < dense.frontier.points.size(); ++j) {
      if (i == j) continue;
      CHECK_FALSE(dominates(dense.frontier.points[i].values,
                            dense.frontier.points[j].values));
    }
  }
}

TEST_CASE("lift rejects duplicates and constraint violations") {
  const auto problem = corner_bowls();
  nbi::NbiOptions nbi_opt;
  nbi_opt.divisions = 4;
  nbi_opt.solver.seed = 65;
  const auto base = nbi::nbi_frontier(problem, nbi_opt);

  // duplicate: reuse an existing frontier point's decision
  CorrectedPoint duplicate;
  duplicate.decision = base.frontier.points[0].decision;
  duplicate.lambda = 0.5;
  ParetoPoint out;
  CHECK(lift_to_three(problem, duplicate, base.frontier.bounds,
                      base.frontier.points, 1e-9,
                      &out) == LiftOutcome::kDuplicate);

  // constraint violation: add a constraint the candidate breaks
  auto constrained = problem;
  constrained.inequality_constraints.push_back(
      {[](const moo::DecisionVector& x) { return x[0]; }, 0.4, 0.6});
  CorrectedPoint outside;
  outside.decision = {0.0, 0.0};
  CHECK(lift_to_three(constrained, outside, base.frontier.bounds,
                      base.frontier.points, 1e-9,
                      &out) == LiftOutcome::kConstraintViolation);
}

TEST_CASE("accepted lifts are non-dominated against the brute-force front") {
  const auto problem = corner_bowls();
  nbi::NbiOptions nbi_opt;
  nbi_opt.divisions = 5;
  nbi_opt.solver.seed = 66;
  const auto base = nbi::nbi_frontier(problem, nbi_opt);
  AwsOptions options;
  options.solver.seed = 67;
  const auto dense = densify_frontier(problem, base.frontier, options);

  const auto oracle_front = oracles::brute_force_front(
      [&](const std::vector<double>& x) {
        return moo::evaluate_all(problem, x);
      },
      {0.0, 0.0}, {1.0, 1.0}, 120);

  for (const auto& p : dense.frontier.points) {
    if (p.source != PointSource::kAwsLifted) continue;
    for (const auto& q : oracle_front) {
      // no oracle point may dominate a lifted point by a clear margin
      bool strictly_better = true;
      for (int j = 0; j < 3; ++j) {
        if (q[j] > p.values[j] - 1e-3) strictly_better = false;
      }
      CHECK_FALSE(strictly_better);
    }
  }
}
