#ifndef INBI_COMPROMISE_HPP
#define INBI_COMPROMISE_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "inbi/pareto.hpp"

/// Mahalanobis-distance double-base-point ranking over a non-inferior set:
/// evaluation matrix, positive/negative ideal points, weighted Mahalanobis
/// distances and relative closeness.
namespace inbi::compromise {

/// n x 3 matrix of objective values normalized over the set itself, so each
/// column spans exactly [0, 1].
struct EvaluationMatrix {
  std::vector<std::array<double, 3>> rows;

  [[nodiscard]] std::size_t size() const { return rows.size(); }
};

struct CompromiseConfig {
  std::array<double, 3> weights{1.0, 1.0, 1.0};  // decision-maker preference
  double lambda_reg = 1e-8;      // ridge added to the covariance
  double max_condition = 1e8;    // shrink toward identity above this
};

/// Builds the evaluation matrix from the points' raw objective values.
/// Throws std::domain_error when an objective is flat over the set
/// (degenerate normalization) or the set has fewer than 2 points.
EvaluationMatrix build_evaluation_matrix(const std::vector<ParetoPoint>& points);

struct IdealPoints {
  std::array<double, 3> positive{};  // column minima (all minimized)
  std::array<double, 3> negative{};  // column maxima
};

IdealPoints ideal_points(const EvaluationMatrix& u);

/// Sample covariance of the evaluation-matrix columns.
Covariance evaluation_covariance(const EvaluationMatrix& u);

/// Regularized covariance: sigma + lambda_reg I, shrunk toward the identity
/// in deterministic steps while its condition number exceeds max_condition.
Covariance regularize_covariance(const Covariance& sigma, double lambda_reg,
                                 double max_condition);

/// Relative closeness Th_i = d_i+ / (d_i+ + d_i-) with
/// d_i+- = sqrt((u_i - u+-)^T w^T Sigma^-1 w (u_i - u+-)).
/// Throws std::domain_error when the regularized covariance is singular or
/// the set degenerates to a single point.
std::vector<double> closeness(const EvaluationMatrix& u,
                              const CompromiseConfig& config,
                              const Covariance& sigma);

/// Index of the smallest closeness; ties go to the lowest index.
std::size_t pick_compromise(const std::vector<double>& th);

}  // namespace inbi::compromise

#endif  // INBI_COMPROMISE_HPP
