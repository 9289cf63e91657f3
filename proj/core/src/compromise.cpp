#include "inbi/compromise.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace inbi::compromise {

namespace {

Eigen::Matrix3d to_eigen(const Covariance& c) {
  Eigen::Matrix3d m;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m(i, j) = c[i][j];
  }
  return m;
}

Covariance from_eigen(const Eigen::Matrix3d& m) {
  Covariance c{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) c[i][j] = m(i, j);
  }
  return c;
}

double condition_number(const Covariance& c) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(to_eigen(c));
  const auto& ev = solver.eigenvalues();
  const double lo = ev(0);
  const double hi = ev(2);
  if (!(lo > 0.0)) return std::numeric_limits<double>::infinity();
  return hi / lo;
}

}  // namespace

EvaluationMatrix build_evaluation_matrix(
    const std::vector<ParetoPoint>& points) {
  if (points.size() < 2) {
    throw std::domain_error("evaluation matrix needs at least 2 points");
  }
  std::array<double, 3> lo{};
  std::array<double, 3> hi{};
  for (int j = 0; j < 3; ++j) {
    lo[j] = hi[j] = points[0].values[j];
    for (const auto& p : points) {
      lo[j] = std::min(lo[j], p.values[j]);
      hi[j] = std::max(hi[j], p.values[j]);
    }
    if (!(hi[j] > lo[j])) {
      throw std::domain_error("objective " + std::to_string(j) +
                              " is flat over the set");
    }
  }

  EvaluationMatrix u;
  u.rows.reserve(points.size());
  for (const auto& p : points) {
    std::array<double, 3> row{};
    for (int j = 0; j < 3; ++j) {
      row[j] = (p.values[j] - lo[j]) / (hi[j] - lo[j]);
    }
    u.rows.push_back(row);
  }
  return u;
}

IdealPoints ideal_points(const EvaluationMatrix& u) {
  if (u.size() < 2) {
    throw std::domain_error("ideal points need at least 2 rows");
  }
  IdealPoints ideal;
  ideal.positive = u.rows[0];
  ideal.negative = u.rows[0];
  for (const auto& row : u.rows) {
    for (int j = 0; j < 3; ++j) {
      ideal.positive[j] = std::min(ideal.positive[j], row[j]);
      ideal.negative[j] = std::max(ideal.negative[j], row[j]);
    }
  }
  return ideal;
}

Covariance evaluation_covariance(const EvaluationMatrix& u) {
  Covariance cov{};
  const std::size_t n = u.size();
  if (n < 2) return cov;

  std::array<double, 3> mean{};
  for (const auto& row : u.rows) {
    for (int j = 0; j < 3; ++j) mean[j] += row[j];
  }
  for (auto& m : mean) m /= static_cast<double>(n);

  for (const auto& row : u.rows) {
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        cov[a][b] += (row[a] - mean[a]) * (row[b] - mean[b]);
      }
    }
  }
  for (auto& r : cov) {
    for (auto& v : r) v /= static_cast<double>(n - 1);
  }
  return cov;
}

Covariance regularize_covariance(const Covariance& sigma, double lambda_reg,
                                 double max_condition) {
  if (lambda_reg < 0.0) {
    throw std::invalid_argument("lambda_reg must be >= 0");
  }
  Covariance m = sigma;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const double avg = 0.5 * (m[i][j] + m[j][i]);
      m[i][j] = avg;
      m[j][i] = avg;
    }
  }
  for (int i = 0; i < 3; ++i) m[i][i] += lambda_reg;

  if (condition_number(m) <= max_condition) return m;

  // Deterministic shrinkage toward the identity; gamma = 1 always succeeds.
  for (int step = 1; step <= 10; ++step) {
    const double gamma = 0.1 * step;
    Covariance shrunk{};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        shrunk[i][j] = (1.0 - gamma) * m[i][j] + (i == j ? gamma : 0.0);
      }
    }
    if (condition_number(shrunk) <= max_condition) return shrunk;
  }
  throw std::domain_error("covariance could not be regularized");
}

std::vector<double> closeness(const EvaluationMatrix& u,
                              const CompromiseConfig& config,
                              const Covariance& sigma) {
  if (u.size() < 2) {
    throw std::domain_error("closeness needs at least 2 rows");
  }
  bool any_weight = false;
  for (double w : config.weights) {
    if (w < 0.0) throw std::invalid_argument("weights must be >= 0");
    if (w > 0.0) any_weight = true;
  }
  if (!any_weight) throw std::invalid_argument("weights must not all be zero");

  const Covariance reg =
      regularize_covariance(sigma, config.lambda_reg, config.max_condition);

  const Eigen::Matrix3d reg_m = to_eigen(reg);
  if (!(std::abs(reg_m.determinant()) > 0.0) ||
      !std::isfinite(reg_m.determinant())) {
    throw std::domain_error("regularized covariance is singular");
  }
  const Covariance inv = from_eigen(Eigen::Matrix3d(reg_m.inverse()));

  const IdealPoints ideal = ideal_points(u);

  const auto distance = [&](const std::array<double, 3>& row,
                            const std::array<double, 3>& base) {
    std::array<double, 3> v{};
    for (int j = 0; j < 3; ++j) v[j] = config.weights[j] * (row[j] - base[j]);
    std::array<double, 3> y{};
    for (int j = 0; j < 3; ++j) {
      double acc = 0.0;
      for (int k = 0; k < 3; ++k) acc += inv[j][k] * v[k];
      y[j] = acc;
    }
    double q = 0.0;
    for (int j = 0; j < 3; ++j) q += v[j] * y[j];
    if (q < 0.0) {
      // Indefinite inverse would make the distance imaginary.
      throw std::domain_error("covariance quadratic form is not PSD");
    }
    return std::sqrt(q);
  };

  std::vector<double> th(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double d_plus = distance(u.rows[i], ideal.positive);
    const double d_minus = distance(u.rows[i], ideal.negative);
    if (d_plus + d_minus == 0.0) {
      throw std::domain_error("point set degenerates to a single point");
    }
    th[i] = d_plus / (d_plus + d_minus);
  }
  return th;
}

std::size_t pick_compromise(const std::vector<double>& th) {
  if (th.empty()) throw std::invalid_argument("empty closeness vector");
  std::size_t best = 0;
  for (std::size_t i = 1; i < th.size(); ++i) {
    if (th[i] < th[best]) best = i;
  }
  return best;
}

}  // namespace inbi::compromise
