#ifndef INBI_AUAM_HPP
#define INBI_AUAM_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "inbi/pareto.hpp"

/// Adjust-uniform-axes selection: frontier points are matched, along a fixed
/// positive axis direction, against a uniform lattice on the plane through
/// the three normalized anchors, yielding a widely and evenly distributed
/// non-inferior subset.
namespace inbi::auam {

/// The plane A x + B y + C z = 1 through the normalized anchors, with the
/// expanded bound box the uniform lattice is clipped to.
struct InsinuationSurface {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double expansion = 0.0;  // omega_mn_min
  std::array<double, 2> box{0.0, 1.0};  // [0 - expansion, 1 + expansion]

  [[nodiscard]] double plane_value(const std::array<double, 3>& p) const {
    return a * p[0] + b * p[1] + c * p[2];
  }
};

/// Fits the surface through three normalized anchor vectors. Throws
/// std::runtime_error when the anchors are affinely dependent or C is 0.
InsinuationSurface fit_surface(
    const std::array<std::array<double, 3>, 3>& anchors, double omega_mn_min);

/// Regular barycentric lattice of pitch 1/grid on the surface, extended
/// past the anchor triangle far enough to cover the expansion and clipped
/// to the expanded box. All returned points satisfy the plane equation.
std::vector<std::array<double, 3>> uniform_points(
    const InsinuationSurface& surface,
    const std::array<std::array<double, 3>, 3>& anchors, int grid);

/// Axis direction and matching tolerances of the selection stage.
struct AxisFamily {
  std::array<double, 3> direction{};  // strictly positive components
  std::array<double, 3> delta_d{};    // per-coordinate tolerance box
  double omega_bar = 1.0;             // mean per-plane refinement count

  void validate() const;
};

/// Builds the family from the per-plane refinement counts: direction
/// (1,1,1)/sqrt(3), omega_bar their mean, and the tolerance box
/// delta_d1 = delta_d2 = (1 + 2 omega_mn_min) / omega_bar with the third
/// component scaled by the plane slope.
AxisFamily make_axis_family(const InsinuationSurface& surface,
                            const std::array<int, 3>& plane_refinement);

/// Smallest per-plane inverse refinement count, the lattice expansion.
double expansion_factor(const std::array<int, 3>& plane_refinement);

struct SelectionTraceRow {
  std::size_t theta = 0;               // uniform point index
  std::array<double, 3> uniform{};     // s_bar
  long matched_index = -1;             // candidate index, -1 when unmatched
  double distance = 0.0;               // |s_bar - s_tilde| of the match
};

struct SelectionResult {
  std::vector<std::size_t> selected_indices;  // into the candidate set
  std::vector<ParetoPoint> selected;
  std::vector<SelectionTraceRow> trace;
};

/// For every uniform point, finds the candidate whose surface projection
/// along the axis direction is nearest within the tolerance box; among
/// equally near projections the one travelling deepest along the axis wins.
/// Throws std::runtime_error when nothing is selected at all.
SelectionResult axis_select(const std::vector<ParetoPoint>& candidates,
                            const AxisFamily& family,
                            const InsinuationSurface& surface,
                            const std::vector<std::array<double, 3>>& uniform);

/// Grid pitch selection: the smallest grid whose lattice is at least twice
/// the candidate count, capped at `max_points` lattice points.
int choose_grid(std::size_t candidate_count, const InsinuationSurface& surface,
                int max_points = 300);

}  // namespace inbi::auam

#endif  // INBI_AUAM_HPP
