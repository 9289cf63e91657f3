#ifndef INBI_TRR_HPP
#define INBI_TRR_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "inbi/core_model.hpp"

/// Transfer-retention ratio (TRR): per-building indices alpha (PV) and
/// beta (wind) measuring renewable output versus reserve, plus the pairwise
/// dispersion that is minimized as a boundary condition of the optimizer.
namespace inbi::trr {

/// Thrown when a TRR ratio is requested below the generation floor.
class GenerationFloorError : public std::domain_error {
 public:
  explicit GenerationFloorError(const std::string& what)
      : std::domain_error(what) {}
};

using CoefficientMatrix = std::vector<std::vector<double>>;

struct TrrParams {
  double rho_b = 1.0;        // coordination parameter, > 0
  double gamma_l = 0.1;      // combined-effect coefficient, >= 0
  double epsilon_gen = 1e-6;  // generation floor (MW)

  /// Action coefficient matrices. Empty means all-ones off-diagonal of
  /// whatever size the observation set has.
  CoefficientMatrix k_alpha;
  CoefficientMatrix k_beta;

  void validate() const;
};

/// Observation series with absent entries for observations below the
/// generation floor (absent, not zero).
using TrrSeries = std::vector<std::optional<double>>;

enum class TrrKind { kPv, kWind };

/// Slot totals of the two renewable resources (MW).
struct SlotTotals {
  double pv = 0.0;    // P_s.g
  double wind = 0.0;  // P_s.f
};

/// The ratio for one building at one observation:
///   alpha = rho_b * (P_u.g + gamma_l (P_s.f - P_u.f)) / P_s.g
///               * (-ln(P_s.g * P_u.g / sum P_s.g^2))
/// and symmetrically for wind. `usage` is the building's usage of the
/// resource in question, `own_other_usage` its usage of the other resource,
/// `day_sum_sq` the day's sum of squared slot totals of the resource.
/// Throws GenerationFloorError below the floor and std::domain_error when
/// the log argument leaves (0, 1].
double trr_ratio(TrrKind kind, double usage, double own_other_usage,
                 const SlotTotals& totals, double day_sum_sq,
                 const TrrParams& params);

/// Pairwise dispersion sum_{i,j} K[i][j] * |v_i - v_j| over present
/// observations. Throws std::invalid_argument on a size mismatch and
/// std::domain_error with fewer than 2 present observations.
double trr_dispersion(const TrrSeries& values, const CoefficientMatrix& k);

/// All-ones off-diagonal matrix, the neutral default coefficient.
CoefficientMatrix uniform_coefficients(std::size_t n);

/// Per-building alpha/beta observations of a dispatched day.
struct TrrSeriesSet {
  std::vector<TrrSeries> alpha;  // [building][slot]
  std::vector<TrrSeries> beta;
};

/// Computes the 96-observation alpha/beta series per building from a
/// dispatch evaluation. Observations where the slot total or the building
/// usage is below the generation floor are marked absent.
TrrSeriesSet compute_trr_series(const DispatchEvaluation& dispatch,
                                const TrrParams& params);

/// Day-mean alpha (or beta) per building, absent when a building has no
/// present observations.
TrrSeries day_mean(const std::vector<TrrSeries>& per_building);

/// Soft boundary-condition penalty added to scalarized subproblems:
/// lambda_trr * (dispersion of day-mean alphas + dispersion of day-mean
/// betas) across buildings. Zero when lambda_trr is 0 or when fewer than
/// two buildings have present observations.
double trr_penalty(const DispatchEvaluation& dispatch, const TrrParams& params,
                   double lambda_trr);

}  // namespace inbi::trr

#endif  // INBI_TRR_HPP
