#include "inbi/aws.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "inbi/rng.hpp"

namespace inbi::aws {

const char* PlaneSpec::name() const {
  switch (id) {
    case PlaneId::kXoy: return "xoy";
    case PlaneId::kYoz: return "yoz";
    case PlaneId::kZox: return "zox";
  }
  return "?";
}

std::array<PlaneSpec, 3> coordinate_planes() {
  return {PlaneSpec{PlaneId::kXoy, 0, 1}, PlaneSpec{PlaneId::kYoz, 1, 2},
          PlaneSpec{PlaneId::kZox, 2, 0}};
}

SegmentThresholds thresholds_from_spacing(double d_set) {
  if (!(d_set > 0.0)) {
    throw std::invalid_argument("d_set must be positive");
  }
  SegmentThresholds t;
  t.delta_q = 2.0 * d_set;
  t.delta_m = t.delta_q / std::sqrt(2.0);
  t.delta_n = t.delta_m;
  return t;
}

std::vector<SparseSegment> sparse_segments(const FrontierSet& frontier,
                                           const PlaneSpec& plane,
                                           double d_set, int max_refinement) {
  if (frontier.points.size() < 2) {
    throw std::invalid_argument("need at least 2 projected points");
  }
  const SegmentThresholds th = thresholds_from_spacing(d_set);

  struct Projected {
    std::array<double, 2> p;
    std::size_t source;
  };
  std::vector<Projected> proj;
  proj.reserve(frontier.points.size());
  for (std::size_t i = 0; i < frontier.points.size(); ++i) {
    const auto& s = frontier.points[i].normalized;
    proj.push_back({{s[plane.axis_a], s[plane.axis_b]}, i});
  }
  std::sort(proj.begin(), proj.end(), [](const Projected& a, const Projected& b) {
    if (a.p[0] != b.p[0]) return a.p[0] < b.p[0];
    return a.p[1] < b.p[1];
  });

  std::vector<SparseSegment> segments;
  for (std::size_t i = 0; i + 1 < proj.size(); ++i) {
    const auto& lo = proj[i];
    const auto& hi = proj[i + 1];
    const double dx = hi.p[0] - lo.p[0];
    const double dy = hi.p[1] - lo.p[1];
    const double length = std::hypot(dx, dy);
    if (length <= th.delta_q) continue;

    SparseSegment seg;
    // P_a carries the larger abscissa, P_b the larger ordinate; the offset
    // constraints cut both endpoint neighbourhoods away.
    if (hi.p[0] >= lo.p[0]) {
      seg.endpoint_a = hi.p;
      seg.index_a = hi.source;
    } else {
      seg.endpoint_a = lo.p;
      seg.index_a = lo.source;
    }
    if (lo.p[1] >= hi.p[1]) {
      seg.endpoint_b = lo.p;
      seg.index_b = lo.source;
    } else {
      seg.endpoint_b = hi.p;
      seg.index_b = hi.source;
    }
    seg.length = length;
    seg.refinement_count = static_cast<int>(
        std::ceil(length / th.delta_q)) - 1;
    seg.refinement_count = std::min(seg.refinement_count, max_refinement);
    if (seg.refinement_count < 1) continue;  // boundary: gap of exactly delta_q
    segments.push_back(seg);
  }
  return segments;
}

std::vector<CorrectedPoint> aws_refine(const moo::MooProblem& problem,
                                       const SparseSegment& segment,
                                       const PlaneSpec& plane,
                                       const moo::NormalizationBounds& bounds,
                                       const SegmentThresholds& thresholds,
                                       const AwsOptions& options,
                                       const moo::DecisionVector& start_hint) {
  if (segment.refinement_count < 1) {
    throw std::invalid_argument("segment has no refinement steps");
  }
  if (!start_hint.empty() && start_hint.size() != problem.dimension) {
    throw std::invalid_argument("start hint dimension mismatch");
  }

  const std::size_t ja = plane.axis_a;
  const std::size_t jb = plane.axis_b;

  const auto normalized_axis = [&problem, &bounds](std::size_t axis,
                                                   const moo::DecisionVector& x) {
    const double f = problem.objectives[axis](x);
    return (f - bounds.f_min[axis]) / (bounds.f_max[axis] - bounds.f_min[axis]);
  };

  // Offset constraints: stay strictly inside both endpoints.
  const double cap_a = segment.endpoint_a[0] - thresholds.delta_m;
  const double cap_b = segment.endpoint_b[1] - thresholds.delta_n;

  moo::MooProblem sub = problem;
  sub.inequality_constraints.push_back(
      {[normalized_axis, ja](const moo::DecisionVector& x) {
         return normalized_axis(ja, x);
       },
       -1e30, cap_a});
  sub.inequality_constraints.push_back(
      {[normalized_axis, jb](const moo::DecisionVector& x) {
         return normalized_axis(jb, x);
       },
       -1e30, cap_b});

  const int omega = segment.refinement_count;

  std::vector<CorrectedPoint> corrected;
  for (int step = 0; step <= omega; ++step) {
    const double lambda = static_cast<double>(step) / omega;

    const auto weighted = [normalized_axis, ja, jb,
                           lambda](const moo::DecisionVector& x) {
      return lambda * normalized_axis(ja, x) +
             (1.0 - lambda) * normalized_axis(jb, x);
    };

    moo::ScalarSolverOptions opt = options.solver;
    opt.seed = derive_seed(options.solver.seed,
                           0x617773ULL + static_cast<std::uint64_t>(plane.id),
                           static_cast<std::uint64_t>(step));

    moo::DecisionVector start = start_hint;
    if (start.empty()) {
      start.resize(problem.dimension);
      for (std::size_t i = 0; i < problem.dimension; ++i) {
        start[i] = 0.5 * (problem.lower[i] + problem.upper[i]);
      }
    }

    const auto report = moo::solve_scalar(sub, weighted, start, opt);
    if (!report.converged) continue;
    if (sub.constraint_violation(report.solution) > moo::kConstraintTolerance) {
      continue;  // infeasible subproblem, segment point dropped
    }

    CorrectedPoint cp;
    cp.decision = report.solution;
    cp.lambda = lambda;
    cp.plane_values = {normalized_axis(ja, report.solution),
                       normalized_axis(jb, report.solution)};
    corrected.push_back(std::move(cp));
  }
  return corrected;
}

LiftOutcome lift_to_three(const moo::MooProblem& problem,
                          const CorrectedPoint& corrected,
                          const moo::NormalizationBounds& bounds,
                          const std::vector<ParetoPoint>& existing,
                          double duplicate_tolerance, ParetoPoint* out) {
  if (problem.constraint_violation(corrected.decision) >
      moo::kConstraintTolerance) {
    return LiftOutcome::kConstraintViolation;
  }

  ParetoPoint p;
  p.decision = corrected.decision;
  p.values = moo::evaluate_all(problem, corrected.decision);
  p.normalized = moo::normalize_objectives(p.values, bounds);
  p.source = PointSource::kAwsLifted;

  for (const auto& q : existing) {
    if (nearly_equal(p.normalized, q.normalized, duplicate_tolerance)) {
      return LiftOutcome::kDuplicate;
    }
  }
  for (const auto& q : existing) {
    if (dominates(q.values, p.values)) {
      return LiftOutcome::kDominated;
    }
  }
  if (out != nullptr) *out = std::move(p);
  return LiftOutcome::kAccepted;
}

AwsResult densify_frontier(const moo::MooProblem& problem,
                           const FrontierSet& frontier,
                           const AwsOptions& options) {
  if (problem.objective_count() != 3) {
    throw std::invalid_argument("plane densification requires 3 objectives");
  }
  if (!(frontier.min_spacing > 0.0)) {
    throw std::invalid_argument("frontier carries no positive min spacing");
  }

  const SegmentThresholds th = thresholds_from_spacing(frontier.min_spacing);
  const int max_refinement =
      static_cast<int>(std::llround(1.0 / options.min_weight_step));

  AwsResult result;
  result.frontier.bounds = frontier.bounds;
  result.frontier.min_spacing = frontier.min_spacing;

  std::vector<ParetoPoint> merged = frontier.points;

  for (const PlaneSpec& plane : coordinate_planes()) {
    const auto segments =
        sparse_segments(frontier, plane, frontier.min_spacing, max_refinement);
    result.segments_total += static_cast<int>(segments.size());

    int plane_omega = 1;
    int segment_no = 0;
    for (const auto& segment : segments) {
      plane_omega = std::max(plane_omega, segment.refinement_count);

      moo::DecisionVector hint(problem.dimension);
      const auto& da = frontier.points[segment.index_a].decision;
      const auto& db = frontier.points[segment.index_b].decision;
      for (std::size_t i = 0; i < problem.dimension; ++i) {
        hint[i] = 0.5 * (da[i] + db[i]);
      }

      const auto corrected = aws_refine(problem, segment, plane,
                                        frontier.bounds, th, options, hint);
      if (corrected.empty()) {
        ++result.segments_unfilled;
        result.warnings.push_back(std::string("plane ") + plane.name() +
                                  " segment " + std::to_string(segment_no) +
                                  ": all subproblems infeasible");
      }
      for (const auto& cp : corrected) {
        ParetoPoint lifted;
        const LiftOutcome outcome =
            lift_to_three(problem, cp, frontier.bounds, merged,
                          options.duplicate_tolerance, &lifted);
        RefinementRecord rec;
        rec.plane = plane.id;
        rec.segment = segment_no;
        rec.lambda = cp.lambda;
        rec.accepted = outcome == LiftOutcome::kAccepted;
        if (rec.accepted) {
          rec.values = {lifted.values[0], lifted.values[1], lifted.values[2]};
          merged.push_back(std::move(lifted));
          ++result.lifted_accepted;
        } else {
          ++result.lifted_rejected;
        }
        result.records.push_back(rec);
      }
      ++segment_no;
    }
    result.plane_refinement[static_cast<std::size_t>(plane.id)] = plane_omega;
  }

  merged = filter_dominated(std::move(merged));
  result.frontier.points = std::move(merged);
  result.frontier.covariance = estimate_covariance(result.frontier.points);
  return result;
}

}  // namespace inbi::aws
