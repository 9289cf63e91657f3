#ifndef INBI_MOO_HPP
#define INBI_MOO_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

/// Generic multi-objective problem description, objective normalization and
/// the scalar subproblem solver every frontier method is built on.
namespace inbi::moo {

using DecisionVector = std::vector<double>;
using ScalarFn = std::function<double(const DecisionVector&)>;

/// Constraint-violation slack treated as feasible.
inline constexpr double kConstraintTolerance = 1e-6;

/// An inequality constraint lower <= g(x) <= upper.
struct BoundedConstraint {
  ScalarFn fn;
  double lower = -1e30;
  double upper = 1e30;
};

struct MooProblem {
  std::size_t dimension = 0;
  std::vector<ScalarFn> objectives;  // 2 or 3 entries
  std::vector<ScalarFn> equality_constraints;          // H_0(x) = 0
  std::vector<BoundedConstraint> inequality_constraints;  // G_0 bounds
  DecisionVector lower;  // box bounds
  DecisionVector upper;

  /// Optional penalty added to every scalarized subproblem objective
  /// (the TRR boundary condition hooks in here).
  ScalarFn scalar_penalty;

  [[nodiscard]] std::size_t objective_count() const {
    return objectives.size();
  }
  void validate() const;

  /// Max constraint violation of x (0 when feasible).
  [[nodiscard]] double constraint_violation(const DecisionVector& x) const;
};

/// Per-objective normalization bounds (payoff-table extremes).
struct NormalizationBounds {
  std::vector<double> f_min;
  std::vector<double> f_max;

  void validate() const;
};

/// s_j = (f_j - f_min_j) / (f_max_j - f_min_j); values outside [0, 1] are
/// not clamped. Throws on degenerate bounds.
std::vector<double> normalize_objectives(const std::vector<double>& values,
                                         const NormalizationBounds& bounds);

struct ScalarSolverOptions {
  double mesh_tolerance = 1e-6;
  int max_evaluations = 5000;  // per start, across all penalty rounds
  int multistarts = 3;
  std::uint64_t seed = 0;
  double initial_mesh = 0.1;          // fraction of the box range
  double penalty_initial = 1e2;
  double penalty_growth = 100.0;
  int penalty_rounds = 4;
};

struct ScalarSolveReport {
  DecisionVector solution;
  // Scalar objective at the solution, including the scalar_penalty hook,
  // excluding the constraint penalty.
  double value = 0.0;
  // Pattern stationarity on the final penalty round: the mesh shrank below
  // tolerance or a full poll found no improving neighbour.
  bool converged = false;
  int iterations = 0;  // total objective evaluations spent
};

/// Minimizes `objective` over the problem's box subject to its constraints
/// with a compass pattern search under an exterior quadratic penalty of
/// increasing weight. Deterministic for a fixed seed; non-convergence is
/// reported through the flag, never silently.
ScalarSolveReport solve_scalar(const MooProblem& problem,
                               const ScalarFn& objective,
                               const DecisionVector& start,
                               const ScalarSolverOptions& options);

struct AnchorSet {
  std::vector<DecisionVector> decisions;       // one per objective
  std::vector<std::vector<double>> objectives;  // full vectors at each anchor
  NormalizationBounds bounds;
};

/// Per-objective individual minima and the normalization bounds they span.
/// Throws std::runtime_error when any anchor solve fails to converge.
AnchorSet anchor_solutions(const MooProblem& problem,
                           const ScalarSolverOptions& options);

/// Evaluates all objectives at x (applying no penalty).
std::vector<double> evaluate_all(const MooProblem& problem,
                                 const DecisionVector& x);

}  // namespace inbi::moo

#endif  // INBI_MOO_HPP
