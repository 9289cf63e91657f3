#include "inbi/auam.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace inbi::auam {

namespace {

constexpr double kOnPlaneTolerance = 1e-9;

double det3(const std::array<std::array<double, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

InsinuationSurface fit_surface(
    const std::array<std::array<double, 3>, 3>& anchors, double omega_mn_min) {
  const double det = det3(anchors);

  double scale = 0.0;
  for (const auto& row : anchors) {
    for (double v : row) scale = std::max(scale, std::abs(v));
  }
  if (std::abs(det) <= 1e-12 * std::max(scale * scale * scale, 1.0)) {
    throw std::runtime_error(
        "insinuation surface is degenerate: anchors are affinely dependent");
  }

  // Cramer's rule on rows(anchors) * (A, B, C)^T = (1, 1, 1)^T.
  std::array<std::array<double, 3>, 3> m;
  std::array<double, 3> coeff{};
  for (int col = 0; col < 3; ++col) {
    m = anchors;
    for (int row = 0; row < 3; ++row) m[row][col] = 1.0;
    coeff[col] = det3(m) / det;
  }

  InsinuationSurface surface;
  surface.a = coeff[0];
  surface.b = coeff[1];
  surface.c = coeff[2];
  surface.expansion = omega_mn_min;
  surface.box = {0.0 - omega_mn_min, 1.0 + omega_mn_min};

  if (std::abs(surface.c) < 1e-12) {
    throw std::runtime_error("insinuation surface has C = 0");
  }
  for (const auto& anchor : anchors) {
    if (std::abs(surface.plane_value(anchor) - 1.0) > kOnPlaneTolerance) {
      throw std::runtime_error("anchor does not satisfy the fitted plane");
    }
  }
  return surface;
}

std::vector<std::array<double, 3>> uniform_points(
    const InsinuationSurface& surface,
    const std::array<std::array<double, 3>, 3>& anchors, int grid) {
  if (grid < 2) throw std::invalid_argument("grid must be >= 2");

  // Rings beyond the anchor triangle so the clipped lattice still covers
  // the expanded box.
  const int rings =
      static_cast<int>(std::ceil(surface.expansion * grid)) + 1;

  std::vector<std::array<double, 3>> points;
  const double lo = surface.box[0] - 1e-12;
  const double hi = surface.box[1] + 1e-12;

  for (int i = -rings; i <= grid + 2 * rings; ++i) {
    for (int j = -rings; i + j <= grid + rings; ++j) {
      if (j < -rings) continue;
      const int k = grid - i - j;
      if (k < -rings) continue;
      const double wa = static_cast<double>(i) / grid;
      const double wb = static_cast<double>(j) / grid;
      const double wc = static_cast<double>(k) / grid;
      std::array<double, 3> p{};
      for (int d = 0; d < 3; ++d) {
        p[d] = wa * anchors[0][d] + wb * anchors[1][d] + wc * anchors[2][d];
      }
      if (p[0] < lo || p[0] > hi || p[1] < lo || p[1] > hi || p[2] < lo ||
          p[2] > hi) {
        continue;
      }
      points.push_back(p);
    }
  }
  return points;
}

void AxisFamily::validate() const {
  for (double e : direction) {
    if (!(e > 0.0)) {
      throw std::invalid_argument("axis direction must be strictly positive");
    }
  }
  for (double d : delta_d) {
    if (!(d > 0.0)) {
      throw std::invalid_argument("tolerance box must be positive");
    }
  }
  if (!(omega_bar > 0.0)) {
    throw std::invalid_argument("omega_bar must be positive");
  }
}

double expansion_factor(const std::array<int, 3>& plane_refinement) {
  double smallest = std::numeric_limits<double>::infinity();
  for (int omega : plane_refinement) {
    if (omega < 1) {
      throw std::invalid_argument("plane refinement counts must be >= 1");
    }
    smallest = std::min(smallest, 1.0 / omega);
  }
  return smallest;
}

AxisFamily make_axis_family(const InsinuationSurface& surface,
                            const std::array<int, 3>& plane_refinement) {
  AxisFamily family;
  const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
  family.direction = {inv_sqrt3, inv_sqrt3, inv_sqrt3};

  double sum = 0.0;
  for (int omega : plane_refinement) {
    if (omega < 1) {
      throw std::invalid_argument("plane refinement counts must be >= 1");
    }
    sum += omega;
  }
  family.omega_bar = sum / 3.0;

  const double numerator = 1.0 + 2.0 * surface.expansion;
  family.delta_d[0] = numerator / family.omega_bar;
  family.delta_d[1] = family.delta_d[0];
  family.delta_d[2] = numerator / family.omega_bar *
                      std::max(std::abs(surface.a), std::abs(surface.b)) /
                      std::abs(surface.c);
  family.validate();
  return family;
}

SelectionResult axis_select(
    const std::vector<ParetoPoint>& candidates, const AxisFamily& family,
    const InsinuationSurface& surface,
    const std::vector<std::array<double, 3>>& uniform) {
  if (candidates.empty()) throw std::invalid_argument("no candidates");
  if (uniform.empty()) throw std::invalid_argument("no uniform points");
  family.validate();

  const double plane_dot_e = surface.a * family.direction[0] +
                             surface.b * family.direction[1] +
                             surface.c * family.direction[2];
  if (std::abs(plane_dot_e) < 1e-12) {
    throw std::runtime_error("axis direction is parallel to the surface");
  }

  // Project every candidate along the axis onto the surface.
  struct Projection {
    std::array<double, 3> tilde{};
    double travel = 0.0;
  };
  std::vector<Projection> projections(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& s = candidates[i].normalized;
    const std::array<double, 3> hat{s[0], s[1], s[2]};
    const double travel = (1.0 - surface.plane_value(hat)) / plane_dot_e;
    projections[i].travel = travel;
    for (int d = 0; d < 3; ++d) {
      projections[i].tilde[d] = hat[d] + travel * family.direction[d];
    }
  }

  SelectionResult result;
  std::vector<bool> chosen(candidates.size(), false);

  for (std::size_t theta = 0; theta < uniform.size(); ++theta) {
    const auto& sbar = uniform[theta];
    long best = -1;
    double best_dist_sq = std::numeric_limits<double>::infinity();
    double best_travel = -std::numeric_limits<double>::infinity();

    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const auto& tilde = projections[i].tilde;
      bool in_box = true;
      double dist_sq = 0.0;
      for (int d = 0; d < 3; ++d) {
        const double diff = sbar[d] - tilde[d];
        if (std::abs(diff) > family.delta_d[d]) {
          in_box = false;
          break;
        }
        dist_sq += diff * diff;
      }
      if (!in_box) continue;

      // Nearest projection wins; among (numerically) equal distances the
      // candidate travelling deepest along the axis does.
      const bool closer = dist_sq < best_dist_sq - 1e-12;
      const bool tied = std::abs(dist_sq - best_dist_sq) <= 1e-12;
      if (closer || (tied && projections[i].travel > best_travel)) {
        best = static_cast<long>(i);
        best_dist_sq = dist_sq;
        best_travel = projections[i].travel;
      }
    }

    SelectionTraceRow row;
    row.theta = theta;
    row.uniform = sbar;
    row.matched_index = best;
    row.distance = best >= 0 ? std::sqrt(best_dist_sq) : 0.0;
    result.trace.push_back(row);
    if (best >= 0) chosen[static_cast<std::size_t>(best)] = true;
  }

  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (chosen[i]) {
      result.selected_indices.push_back(i);
      result.selected.push_back(candidates[i]);
    }
  }

  if (result.selected.empty()) {
    throw std::runtime_error(
        "axis selection matched no candidate: " +
        std::to_string(uniform.size()) + " uniform points, " +
        std::to_string(candidates.size()) +
        " candidates, tolerance box (" + std::to_string(family.delta_d[0]) +
        ", " + std::to_string(family.delta_d[1]) + ", " +
        std::to_string(family.delta_d[2]) + ")");
  }
  return result;
}

int choose_grid(std::size_t candidate_count, const InsinuationSurface& surface,
                int max_points) {
  // Pre-clip lattice count for grid g with r expansion rings:
  // compositions of g + 3r into 3 parts.
  const auto lattice_count = [&surface](int g) {
    const int r = static_cast<int>(std::ceil(surface.expansion * g)) + 1;
    const long side = g + 3L * r;
    return (side + 1) * (side + 2) / 2;
  };

  const long target =
      std::min<long>(2 * static_cast<long>(candidate_count), max_points);
  int grid = 2;
  while (lattice_count(grid) < target && lattice_count(grid + 1) <= max_points) {
    ++grid;
  }
  return grid;
}

}  // namespace inbi::auam
