#include "inbi/pareto.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace inbi {

bool dominates(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dominance requires equal dimensions");
  }
  bool strict = false;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] > b[j]) return false;
    if (a[j] < b[j]) strict = true;
  }
  return strict;
}

std::vector<ParetoPoint> filter_dominated(std::vector<ParetoPoint> points) {
  std::vector<bool> dominated(points.size(), false);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (dominated[i]) continue;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (i == j || dominated[j]) continue;
      if (dominates(points[j].values, points[i].values)) {
        dominated[i] = true;
        break;
      }
    }
  }
  std::vector<ParetoPoint> kept;
  kept.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!dominated[i]) kept.push_back(std::move(points[i]));
  }
  return kept;
}

bool nearly_equal(const std::vector<double>& a, const std::vector<double>& b,
                  double tolerance) {
  double sq = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double d = a[j] - b[j];
    sq += d * d;
  }
  return sq <= tolerance * tolerance;
}

std::vector<ParetoPoint> deduplicate(std::vector<ParetoPoint> points,
                                     double tolerance) {
  std::vector<ParetoPoint> kept;
  kept.reserve(points.size());
  for (auto& p : points) {
    bool duplicate = false;
    for (const auto& q : kept) {
      if (nearly_equal(p.normalized, q.normalized, tolerance)) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) kept.push_back(std::move(p));
  }
  return kept;
}

double min_pairwise_spacing(const std::vector<ParetoPoint>& points) {
  if (points.size() < 2) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      double sq = 0.0;
      for (std::size_t k = 0; k < points[i].normalized.size(); ++k) {
        const double d = points[i].normalized[k] - points[j].normalized[k];
        sq += d * d;
      }
      best = std::min(best, sq);
    }
  }
  return std::sqrt(best);
}

Covariance estimate_covariance(const std::vector<ParetoPoint>& points) {
  Covariance cov{};
  const std::size_t n = points.size();
  if (n < 2) return cov;

  std::array<double, 3> mean{};
  for (const auto& p : points) {
    for (std::size_t j = 0; j < 3 && j < p.normalized.size(); ++j) {
      mean[j] += p.normalized[j];
    }
  }
  for (auto& m : mean) m /= static_cast<double>(n);

  for (const auto& p : points) {
    for (std::size_t a = 0; a < 3 && a < p.normalized.size(); ++a) {
      for (std::size_t b = 0; b < 3 && b < p.normalized.size(); ++b) {
        cov[a][b] += (p.normalized[a] - mean[a]) * (p.normalized[b] - mean[b]);
      }
    }
  }
  for (auto& row : cov) {
    for (auto& v : row) v /= static_cast<double>(n - 1);
  }
  return cov;
}

double uniformity_cv(const std::vector<ParetoPoint>& points) {
  const std::size_t n = points.size();
  if (n < 3) return 0.0;

  std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      double sq = 0.0;
      for (std::size_t k = 0; k < points[i].normalized.size(); ++k) {
        const double d = points[i].normalized[k] - points[j].normalized[k];
        sq += d * d;
      }
      nearest[i] = std::min(nearest[i], sq);
    }
    nearest[i] = std::sqrt(nearest[i]);
  }

  double mean = 0.0;
  for (double d : nearest) mean += d;
  mean /= static_cast<double>(n);
  if (mean == 0.0) return 0.0;

  double var = 0.0;
  for (double d : nearest) var += (d - mean) * (d - mean);
  var /= static_cast<double>(n);
  return std::sqrt(var) / mean;
}

double directed_hausdorff(const std::vector<std::vector<double>>& from,
                          const std::vector<std::vector<double>>& to) {
  if (from.empty() || to.empty()) {
    throw std::invalid_argument("directed_hausdorff requires non-empty sets");
  }
  double worst = 0.0;
  for (const auto& p : from) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& q : to) {
      double sq = 0.0;
      for (std::size_t k = 0; k < p.size(); ++k) {
        const double d = p[k] - q[k];
        sq += d * d;
      }
      best = std::min(best, sq);
    }
    worst = std::max(worst, best);
  }
  return std::sqrt(worst);
}

}  // namespace inbi
