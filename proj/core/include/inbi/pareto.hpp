#ifndef INBI_PARETO_HPP
#define INBI_PARETO_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "inbi/moo.hpp"

namespace inbi {

enum class PointSource { kNbi, kAwsLifted };

/// One frontier member: decision, raw objectives, normalized objectives and
/// where it came from.
struct ParetoPoint {
  moo::DecisionVector decision;
  std::vector<double> values;      // raw objective values, minimization sense
  std::vector<double> normalized;  // via the run's NormalizationBounds
  PointSource source = PointSource::kNbi;
};

using Covariance = std::array<std::array<double, 3>, 3>;

/// An ordered collection of mutually non-dominated points with the
/// normalization bounds of its run and the estimated objective covariance.
struct FrontierSet {
  std::vector<ParetoPoint> points;
  moo::NormalizationBounds bounds;
  Covariance covariance{};
  /// Minimum pairwise normalized spacing of the raw NBI points (d_set).
  double min_spacing = 0.0;

  [[nodiscard]] std::size_t size() const { return points.size(); }
};

/// True when a dominates b: a <= b component-wise with at least one strict <.
bool dominates(const std::vector<double>& a, const std::vector<double>& b);

/// Removes dominated points, keeping first occurrences of duplicates.
/// The relative order of survivors is preserved.
std::vector<ParetoPoint> filter_dominated(std::vector<ParetoPoint> points);

/// True when two normalized vectors coincide within `tolerance` (Euclidean).
bool nearly_equal(const std::vector<double>& a, const std::vector<double>& b,
                  double tolerance);

/// Drops points whose normalized objectives duplicate an earlier point.
std::vector<ParetoPoint> deduplicate(std::vector<ParetoPoint> points,
                                     double tolerance);

/// Minimum pairwise Euclidean distance between normalized objective vectors;
/// 0 for fewer than 2 points.
double min_pairwise_spacing(const std::vector<ParetoPoint>& points);

/// Sample covariance of the normalized objective columns (3 objectives).
Covariance estimate_covariance(const std::vector<ParetoPoint>& points);

/// Coefficient of variation of nearest-neighbour distances in normalized
/// space; 0 for fewer than 3 points.
double uniformity_cv(const std::vector<ParetoPoint>& points);

/// Directed Hausdorff distance: max over `from` of the distance to the
/// nearest member of `to`, in whatever space the vectors live in.
double directed_hausdorff(const std::vector<std::vector<double>>& from,
                          const std::vector<std::vector<double>>& to);

}  // namespace inbi

#endif  // INBI_PARETO_HPP
