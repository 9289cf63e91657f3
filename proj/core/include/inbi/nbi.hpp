#ifndef INBI_NBI_HPP
#define INBI_NBI_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "inbi/moo.hpp"
#include "inbi/pareto.hpp"

/// The original normal-boundary intersection frontier generator and the
/// Euclidean double-base-point compromise it ships with.
namespace inbi::nbi {

struct NbiOptions {
  int divisions = 10;  // barycentric grid steps per simplex axis
  moo::ScalarSolverOptions solver;
  /// Normalized-space tolerance below which two points are one point.
  double duplicate_tolerance = 1e-9;
};

struct NbiResult {
  FrontierSet frontier;
  moo::AnchorSet anchors;
  int subproblems_attempted = 0;
  int subproblems_skipped = 0;  // non-converged solves, logged and dropped
  std::vector<std::string> warnings;
};

/// Generates the frontier by solving one travel-maximization subproblem per
/// barycentric weight on the anchor simplex (step 1/divisions), filtering
/// dominated points at the end. Works for 2- or 3-objective problems.
/// Throws std::runtime_error when fewer than 3 points survive.
NbiResult nbi_frontier(const moo::MooProblem& problem,
                       const NbiOptions& options);

/// All barycentric weight vectors with k parts summing to `divisions`.
std::vector<std::vector<int>> simplex_grid(std::size_t k, int divisions);

/// Euclidean double-base-point selection: evaluation matrix per the set's
/// own normalization, ideal points, identity-covariance distances and
/// relative closeness. Returns the argmin index (ties to the lowest index).
std::size_t euclidean_compromise(const FrontierSet& frontier,
                                 const std::array<double, 3>& weights);

/// The closeness values behind euclidean_compromise, exposed for reports.
std::vector<double> euclidean_closeness(const FrontierSet& frontier,
                                        const std::array<double, 3>& weights);

}  // namespace inbi::nbi

#endif  // INBI_NBI_HPP
