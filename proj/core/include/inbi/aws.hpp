#ifndef INBI_AWS_HPP
#define INBI_AWS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "inbi/moo.hpp"
#include "inbi/pareto.hpp"

/// Adaptive-weight-sum densification: sparse segments of the frontier's
/// coordinate-plane projections are refined by weighted-sum subproblems with
/// offset constraints, and the corrected points are lifted back to the
/// three-objective frontier.
namespace inbi::aws {

enum class PlaneId { kXoy = 0, kYoz = 1, kZox = 2 };

/// One coordinate plane with its (abscissa, ordinate) objective pair.
struct PlaneSpec {
  PlaneId id = PlaneId::kXoy;
  std::size_t axis_a = 0;  // abscissa objective index
  std::size_t axis_b = 1;  // ordinate objective index

  [[nodiscard]] const char* name() const;
};

/// The three planes, each objective pair covered exactly once.
std::array<PlaneSpec, 3> coordinate_planes();

/// A too-long stretch between consecutive projected frontier points.
struct SparseSegment {
  std::array<double, 2> endpoint_a{};  // larger-abscissa endpoint (P_a)
  std::array<double, 2> endpoint_b{};  // larger-ordinate endpoint (P_b)
  std::size_t index_a = 0;  // frontier index of endpoint_a's source point
  std::size_t index_b = 0;
  double length = 0.0;       // d_mn_c in the normalized plane
  int refinement_count = 0;  // omega_mn_c = ceil(length / delta_q) - 1
};

struct AwsOptions {
  moo::ScalarSolverOptions solver;
  /// Weight grids never get finer than this step (count cap 1/step).
  double min_weight_step = 0.01;
  double duplicate_tolerance = 1e-9;
};

/// Spacing thresholds derived from the frontier's minimum point spacing:
/// delta_q = 2 d_set split isotropically into the two offset margins.
struct SegmentThresholds {
  double delta_q = 0.0;
  double delta_m = 0.0;
  double delta_n = 0.0;
};

SegmentThresholds thresholds_from_spacing(double d_set);

/// Finds the segments of a plane projection whose consecutive spacing
/// exceeds delta_q. Requires at least 2 projected points.
std::vector<SparseSegment> sparse_segments(const FrontierSet& frontier,
                                           const PlaneSpec& plane,
                                           double d_set,
                                           int max_refinement = 100);

/// A corrected plane point with the decision vector that produced it.
struct CorrectedPoint {
  moo::DecisionVector decision;
  double lambda = 0.0;
  std::array<double, 2> plane_values{};  // normalized (F_a, F_b)
};

/// Solves the weighted-sum subproblem for every lambda of the segment's
/// weight grid under the offset constraints that exclude the endpoints.
/// Infeasible subproblems are dropped; an empty result means the whole
/// segment stayed sparse. `start_hint` seeds the solves (empty: box
/// midpoint); the mean of the segment's endpoint decisions works well.
std::vector<CorrectedPoint> aws_refine(const moo::MooProblem& problem,
                                       const SparseSegment& segment,
                                       const PlaneSpec& plane,
                                       const moo::NormalizationBounds& bounds,
                                       const SegmentThresholds& thresholds,
                                       const AwsOptions& options,
                                       const moo::DecisionVector& start_hint = {});

enum class LiftOutcome { kAccepted, kConstraintViolation, kDominated, kDuplicate };

/// Evaluates all three objectives at the corrected point's decision and
/// accepts it onto the frontier when the original constraints hold and no
/// existing point dominates or duplicates it.
LiftOutcome lift_to_three(const moo::MooProblem& problem,
                          const CorrectedPoint& corrected,
                          const moo::NormalizationBounds& bounds,
                          const std::vector<ParetoPoint>& existing,
                          double duplicate_tolerance, ParetoPoint* out);

/// One row of the per-plane refinement report.
struct RefinementRecord {
  PlaneId plane = PlaneId::kXoy;
  int segment = 0;
  double lambda = 0.0;
  bool accepted = false;
  std::array<double, 3> values{};
};

struct AwsResult {
  FrontierSet frontier;  // merged and re-filtered
  /// Largest refinement count seen per plane (1 when a plane had no
  /// segments), the step-adaptation input of the axis selection stage.
  std::array<int, 3> plane_refinement{1, 1, 1};
  int lifted_accepted = 0;
  int lifted_rejected = 0;
  int segments_total = 0;
  int segments_unfilled = 0;  // all subproblems infeasible
  std::vector<RefinementRecord> records;
  std::vector<std::string> warnings;
};

/// Runs segment detection, refinement and lifting over all three planes and
/// merges the result with the input frontier.
AwsResult densify_frontier(const moo::MooProblem& problem,
                           const FrontierSet& frontier,
                           const AwsOptions& options);

}  // namespace inbi::aws

#endif  // INBI_AWS_HPP
