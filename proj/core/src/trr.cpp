#include "inbi/trr.hpp"

#include <cmath>

namespace inbi::trr {

namespace {

void check_coefficients(const CoefficientMatrix& k, const char* name) {
  const std::size_t n = k.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (k[i].size() != n) {
      throw std::invalid_argument(std::string(name) + " must be square");
    }
    if (k[i][i] != 0.0) {
      throw std::invalid_argument(std::string(name) +
                                  " must have a zero diagonal");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (k[i][j] < 0.0) {
        throw std::invalid_argument(std::string(name) +
                                    " entries must be >= 0");
      }
      if (k[i][j] != k[j][i]) {
        throw std::invalid_argument(std::string(name) + " must be symmetric");
      }
    }
  }
}

}  // namespace

void TrrParams::validate() const {
  if (!(rho_b > 0.0)) throw std::invalid_argument("rho_b must be > 0");
  if (gamma_l < 0.0) throw std::invalid_argument("gamma_l must be >= 0");
  if (!(epsilon_gen > 0.0)) {
    throw std::invalid_argument("epsilon_gen must be > 0");
  }
  if (!k_alpha.empty()) check_coefficients(k_alpha, "k_alpha");
  if (!k_beta.empty()) check_coefficients(k_beta, "k_beta");
}

double trr_ratio(TrrKind kind, double usage, double own_other_usage,
                 const SlotTotals& totals, double day_sum_sq,
                 const TrrParams& params) {
  const double own_total = kind == TrrKind::kPv ? totals.pv : totals.wind;
  const double other_total = kind == TrrKind::kPv ? totals.wind : totals.pv;

  if (own_total < params.epsilon_gen) {
    throw GenerationFloorError("slot total below the generation floor");
  }
  if (!(usage > 0.0)) {
    throw std::domain_error("building usage must be > 0");
  }
  if (!(day_sum_sq > 0.0)) {
    throw std::domain_error("day sum of squared totals must be > 0");
  }

  const double log_arg = own_total * usage / day_sum_sq;
  if (log_arg <= 0.0 || log_arg > 1.0) {
    throw std::domain_error("TRR log argument outside (0, 1]");
  }

  const double reserve =
      usage + params.gamma_l * (other_total - own_other_usage);
  return params.rho_b * (reserve / own_total) * (-std::log(log_arg));
}

double trr_dispersion(const TrrSeries& values, const CoefficientMatrix& k) {
  const std::size_t n = values.size();
  if (k.size() != n) {
    throw std::invalid_argument(
        "coefficient matrix size must match the observation count");
  }
  check_coefficients(k, "coefficient matrix");

  std::size_t present = 0;
  for (const auto& v : values) {
    if (v.has_value()) ++present;
  }
  if (present < 2) {
    throw std::domain_error(
        "dispersion undefined with fewer than 2 present observations");
  }

  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!values[i].has_value()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!values[j].has_value()) continue;
      sum += k[i][j] * std::abs(*values[i] - *values[j]);
    }
  }
  return sum;
}

CoefficientMatrix uniform_coefficients(std::size_t n) {
  CoefficientMatrix k(n, std::vector<double>(n, 1.0));
  for (std::size_t i = 0; i < n; ++i) k[i][i] = 0.0;
  return k;
}

TrrSeriesSet compute_trr_series(const DispatchEvaluation& dispatch,
                                const TrrParams& params) {
  params.validate();
  const std::size_t n = dispatch.pv_used_per_building.size();

  double pv_day_sum_sq = 0.0;
  double wind_day_sum_sq = 0.0;
  for (std::size_t t = 0; t < kSlotsPerDay; ++t) {
    pv_day_sum_sq += dispatch.pv_used_total[t] * dispatch.pv_used_total[t];
    wind_day_sum_sq +=
        dispatch.wind_used_total[t] * dispatch.wind_used_total[t];
  }

  TrrSeriesSet out;
  out.alpha.assign(n, TrrSeries(kSlotsPerDay, std::nullopt));
  out.beta.assign(n, TrrSeries(kSlotsPerDay, std::nullopt));

  for (std::size_t t = 0; t < kSlotsPerDay; ++t) {
    const SlotTotals totals{dispatch.pv_used_total[t],
                            dispatch.wind_used_total[t]};
    const bool pv_live =
        totals.pv >= params.epsilon_gen && pv_day_sum_sq > 0.0;
    const bool wind_live =
        totals.wind >= params.epsilon_gen && wind_day_sum_sq > 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double pu = dispatch.pv_used_per_building[j][t];
      const double wu = dispatch.wind_used_per_building[j][t];
      if (pv_live && pu > params.epsilon_gen) {
        out.alpha[j][t] =
            trr_ratio(TrrKind::kPv, pu, wu, totals, pv_day_sum_sq, params);
      }
      if (wind_live && wu > params.epsilon_gen) {
        out.beta[j][t] =
            trr_ratio(TrrKind::kWind, wu, pu, totals, wind_day_sum_sq, params);
      }
    }
  }
  return out;
}

TrrSeries day_mean(const std::vector<TrrSeries>& per_building) {
  TrrSeries means(per_building.size(), std::nullopt);
  for (std::size_t j = 0; j < per_building.size(); ++j) {
    double sum = 0.0;
    std::size_t count = 0;
    for (const auto& v : per_building[j]) {
      if (v.has_value()) {
        sum += *v;
        ++count;
      }
    }
    if (count > 0) means[j] = sum / static_cast<double>(count);
  }
  return means;
}

double trr_penalty(const DispatchEvaluation& dispatch, const TrrParams& params,
                   double lambda_trr) {
  if (lambda_trr == 0.0) return 0.0;
  if (lambda_trr < 0.0) {
    throw std::invalid_argument("lambda_trr must be >= 0");
  }

  const TrrSeriesSet series = compute_trr_series(dispatch, params);
  const std::size_t n = series.alpha.size();

  const TrrSeries alpha_means = day_mean(series.alpha);
  const TrrSeries beta_means = day_mean(series.beta);

  const auto present = [](const TrrSeries& v) {
    std::size_t c = 0;
    for (const auto& x : v) {
      if (x.has_value()) ++c;
    }
    return c;
  };

  const CoefficientMatrix uniform = (params.k_alpha.empty() ||
                                     params.k_beta.empty())
                                        ? uniform_coefficients(n)
                                        : CoefficientMatrix{};

  double penalty = 0.0;
  if (present(alpha_means) >= 2) {
    penalty += trr_dispersion(alpha_means,
                              params.k_alpha.empty() ? uniform : params.k_alpha);
  }
  if (present(beta_means) >= 2) {
    penalty += trr_dispersion(beta_means,
                              params.k_beta.empty() ? uniform : params.k_beta);
  }
  return lambda_trr * penalty;
}

}  // namespace inbi::trr
