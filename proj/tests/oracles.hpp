// Test-only oracles: independent brute-force and direct-formula routes used
// to compute expected values. Nothing here may call the implementation paths
// it is used to check.

#ifndef INBI_TESTS_ORACLES_HPP
#define INBI_TESTS_ORACLES_HPP

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

namespace oracles {

/// Left Riemann sum of `f` over [0, hours] with `steps` intervals.
inline double riemann_integral(const std::function<double(double)>& f,
                               double hours, int steps) {
  const double dt = hours / steps;
  double sum = 0.0;
  for (int i = 0; i < steps; ++i) {
    sum += f(i * dt);
  }
  return sum * dt;
}

/// Dense grid scan for the minimizer of a 1-D function on [lo, hi].
inline double grid_minimize_1d(const std::function<double(double)>& f,
                               double lo, double hi, int steps) {
  double best_x = lo;
  double best_f = f(lo);
  for (int i = 1; i <= steps; ++i) {
    const double x = lo + (hi - lo) * i / steps;
    const double v = f(x);
    if (v < best_f) {
      best_f = v;
      best_x = x;
    }
  }
  return best_x;
}

/// Dense grid scan over a box, any dimension.
inline std::vector<double> grid_minimize(
    const std::function<double(const std::vector<double>&)>& f,
    const std::vector<double>& lo, const std::vector<double>& hi,
    int steps_per_dim) {
  const std::size_t dim = lo.size();
  std::vector<int> idx(dim, 0);
  std::vector<double> x(dim), best_x(dim);
  double best_f = std::numeric_limits<double>::infinity();
  while (true) {
    for (std::size_t d = 0; d < dim; ++d) {
      x[d] = lo[d] + (hi[d] - lo[d]) * idx[d] / steps_per_dim;
    }
    const double v = f(x);
    if (v < best_f) {
      best_f = v;
      best_x = x;
    }
    std::size_t d = 0;
    while (d < dim && ++idx[d] > steps_per_dim) {
      idx[d] = 0;
      ++d;
    }
    if (d == dim) break;
  }
  return best_x;
}

/// Minimization-sense dominance used by the brute-force front oracle.
inline bool dominates(const std::vector<double>& a,
                      const std::vector<double>& b) {
  bool strict = false;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] > b[j]) return false;
    if (a[j] < b[j]) strict = true;
  }
  return strict;
}

/// Keeps the non-dominated members of a point cloud (values only).
inline std::vector<std::vector<double>> non_dominated_filter(
    const std::vector<std::vector<double>>& cloud) {
  std::vector<std::vector<double>> front;
  for (const auto& candidate : cloud) {
    bool dominated = false;
    for (auto it = front.begin(); it != front.end();) {
      if (dominates(*it, candidate)) {
        dominated = true;
        break;
      }
      if (dominates(candidate, *it)) {
        it = front.erase(it);
      } else {
        ++it;
      }
    }
    if (!dominated) front.push_back(candidate);
  }
  return front;
}

/// Enumerates objective vectors of a problem over a dense decision grid and
/// keeps the non-dominated ones.
inline std::vector<std::vector<double>> brute_force_front(
    const std::function<std::vector<double>(const std::vector<double>&)>& eval,
    const std::vector<double>& lo, const std::vector<double>& hi,
    int steps_per_dim) {
  const std::size_t dim = lo.size();
  std::vector<int> idx(dim, 0);
  std::vector<double> x(dim);
  std::vector<std::vector<double>> cloud;
  while (true) {
    for (std::size_t d = 0; d < dim; ++d) {
      x[d] = lo[d] + (hi[d] - lo[d]) * idx[d] / steps_per_dim;
    }
    cloud.push_back(eval(x));
    std::size_t d = 0;
    while (d < dim && ++idx[d] > steps_per_dim) {
      idx[d] = 0;
      ++d;
    }
    if (d == dim) break;
  }
  return non_dominated_filter(cloud);
}

/// Direct transcription of the PV transfer-retention ratio formula.
inline double trr_alpha_direct(double rho_b, double gamma_l, double p_ug,
                               double p_uf, double p_sg, double p_sf,
                               double sum_sq) {
  return rho_b * ((p_ug + gamma_l * (p_sf - p_uf)) / p_sg) *
         (-std::log(p_sg * p_ug / sum_sq));
}

/// Direct transcription of the wind transfer-retention ratio formula.
inline double trr_beta_direct(double rho_b, double gamma_l, double p_uf,
                              double p_ug, double p_sf, double p_sg,
                              double sum_sq) {
  return rho_b * ((p_uf + gamma_l * (p_sg - p_ug)) / p_sf) *
         (-std::log(p_sf * p_uf / sum_sq));
}

/// 3x3 inverse by Gauss-Jordan elimination with partial pivoting.
inline std::vector<std::vector<double>> invert3(
    std::vector<std::vector<double>> m) {
  std::vector<std::vector<double>> inv = {
      {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 3; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    }
    if (m[pivot][col] == 0.0) throw std::runtime_error("singular matrix");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const double d = m[col][col];
    for (int c = 0; c < 3; ++c) {
      m[col][c] /= d;
      inv[col][c] /= d;
    }
    for (int r = 0; r < 3; ++r) {
      if (r == col) continue;
      const double factor = m[r][col];
      for (int c = 0; c < 3; ++c) {
        m[r][c] -= factor * m[col][c];
        inv[r][c] -= factor * inv[col][c];
      }
    }
  }
  return inv;
}

/// Weighted Mahalanobis distance computed as an explicit double loop over
/// the quadratic form, with its own matrix inverse.
inline double mahalanobis_direct(const std::vector<double>& u,
                                 const std::vector<double>& base,
                                 const std::vector<double>& weights,
                                 const std::vector<std::vector<double>>& sigma) {
  const auto inv = invert3(sigma);
  std::vector<double> v(3);
  for (int j = 0; j < 3; ++j) v[j] = weights[j] * (u[j] - base[j]);
  double q = 0.0;
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      q += v[j] * inv[j][k] * v[k];
    }
  }
  return std::sqrt(q);
}

}  // namespace oracles

#endif  // INBI_TESTS_ORACLES_HPP
