#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "inbi/compromise.hpp"
#include "inbi/nbi.hpp"
#include "oracles.hpp"

using namespace inbi;
using namespace inbi::compromise;

namespace {

std::vector<ParetoPoint> points_from(const std::vector<std::vector<double>>& v) {
  std::vector<ParetoPoint> points;
  for (const auto& row : v) {
    ParetoPoint p;
    p.values = row;
    p.normalized = row;
    points.push_back(std::move(p));
  }
  return points;
}

Covariance identity() {
  Covariance c{};
  for (int i = 0; i < 3; ++i) c[i][i] = 1.0;
  return c;
}

}  // namespace

TEST_CASE("evaluation matrix normalizes each column onto [0, 1]") {
  const auto points = points_from({{10.0, 5.0, 1.0},
                                   {20.0, 1.0, 3.0},
                                   {15.0, 3.0, 2.0}});
  const auto u = build_evaluation_matrix(points);
  for (int j = 0; j < 3; ++j) {
    double lo = 1e300, hi = -1e300;
    for (const auto& row : u.rows) {
      lo = std::min(lo, row[j]);
      hi = std::max(hi, row[j]);
    }
    CHECK(lo == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(hi == doctest::Approx(1.0).epsilon(1e-12));
  }

  const auto flat = points_from({{1.0, 5.0, 2.0}, {2.0, 5.0, 3.0}});
  CHECK_THROWS_AS(build_evaluation_matrix(flat), std::domain_error);
  const auto lonely = points_from({{1.0, 2.0, 3.0}});
  CHECK_THROWS_AS(build_evaluation_matrix(lonely), std::domain_error);
}

TEST_CASE("ideal points are column extrema") {
  EvaluationMatrix u;
  u.rows = {{0.0, 0.0, 0.0}, {1.0, 1.0, 1.0}};
  const auto ideal = ideal_points(u);
  CHECK(ideal.positive == std::array<double, 3>{0.0, 0.0, 0.0});
  CHECK(ideal.negative == std::array<double, 3>{1.0, 1.0, 1.0});

  EvaluationMatrix spread;
  spread.rows = {{0.0, 0.4, 1.0}, {0.4, 1.0, 0.0}, {1.0, 0.0, 0.4}};
  const auto i2 = ideal_points(spread);
  for (int j = 0; j < 3; ++j) {
    CHECK(i2.positive[j] == doctest::Approx(0.0));
    CHECK(i2.negative[j] == doctest::Approx(1.0));
  }

  // random 6x3 column-scan oracle
  std::mt19937_64 rng(79);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  EvaluationMatrix r;
  for (int i = 0; i < 6; ++i) {
    r.rows.push_back({unit(rng), unit(rng), unit(rng)});
  }
  const auto ideal_r = ideal_points(r);
  for (int j = 0; j < 3; ++j) {
    double lo = 1e300, hi = -1e300;
    for (const auto& row : r.rows) {
      lo = std::min(lo, row[j]);
      hi = std::max(hi, row[j]);
    }
    CHECK(ideal_r.positive[j] == lo);
    CHECK(ideal_r.negative[j] == hi);
  }

  EvaluationMatrix single;
  single.rows = {{0.0, 0.0, 0.0}};
  CHECK_THROWS_AS(ideal_points(single), std::domain_error);
}

TEST_CASE("identity covariance and weights reduce to Euclidean bit-for-bit") {
  const std::vector<std::vector<double>> raw = {{3.0, 40.0, 0.12},
                                                {1.0, 70.0, 0.55},
                                                {2.2, 52.0, 0.31},
                                                {1.7, 66.0, 0.09}};
  const auto points = points_from(raw);

  FrontierSet frontier;
  frontier.points = points;
  const std::array<double, 3> w{1.0, 1.0, 1.0};
  const auto euclid = nbi::euclidean_closeness(frontier, w);

  const auto u = build_evaluation_matrix(points);
  CompromiseConfig config;
  config.weights = w;
  config.lambda_reg = 0.0;
  const auto mahal = closeness(u, config, identity());

  REQUIRE(euclid.size() == mahal.size());
  for (std::size_t i = 0; i < euclid.size(); ++i) {
    CHECK(euclid[i] == mahal[i]);  // exact, not approximate
  }
}

TEST_CASE("closeness endpoints") {
  EvaluationMatrix u;
  u.rows = {{0.0, 0.0, 0.0}, {1.0, 1.0, 1.0}, {0.5, 0.25, 0.75}};
  CompromiseConfig config;
  config.lambda_reg = 0.0;
  const auto th = closeness(u, config, identity());
  CHECK(th[0] == doctest::Approx(0.0));  // at the positive ideal
  CHECK(th[1] == doctest::Approx(1.0));  // at the negative ideal
  for (double v : th) {
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
}

TEST_CASE("swapping the ideals flips closeness to 1 - Th") {
  std::mt19937_64 rng(83);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  EvaluationMatrix u;
  u.rows = {{0.0, 0.0, 0.0}, {1.0, 1.0, 1.0}};
  for (int i = 0; i < 4; ++i) {
    u.rows.push_back({unit(rng), unit(rng), unit(rng)});
  }
  CompromiseConfig config;
  config.lambda_reg = 0.0;
  const auto th = closeness(u, config, identity());

  // mirrored matrix: u -> 1 - u swaps the roles of the two ideals
  EvaluationMatrix mirrored;
  for (const auto& row : u.rows) {
    mirrored.rows.push_back({1.0 - row[0], 1.0 - row[1], 1.0 - row[2]});
  }
  const auto th_m = closeness(mirrored, config, identity());
  for (std::size_t i = 0; i < th.size(); ++i) {
    CHECK(th_m[i] == doctest::Approx(1.0 - th[i]).epsilon(1e-12));
  }
}

TEST_CASE("5x3 fixed SPD covariance matches the direct oracle") {
  EvaluationMatrix u;
  u.rows = {{0.0, 0.2, 1.0},
            {0.3, 0.0, 0.7},
            {0.55, 0.45, 0.5},
            {0.8, 0.75, 0.2},
            {1.0, 1.0, 0.0}};
  const std::vector<std::vector<double>> sigma = {
      {2.0, 1.0, 0.0}, {1.0, 2.0, 1.0}, {0.0, 1.0, 2.0}};
  Covariance cov{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) cov[i][j] = sigma[i][j];
  }

  CompromiseConfig config;
  config.weights = {0.4, 0.3, 0.3};
  config.lambda_reg = 0.0;
  const auto th = closeness(u, config, cov);

  const auto ideal = ideal_points(u);
  const std::vector<double> w{0.4, 0.3, 0.3};
  for (std::size_t i = 0; i < u.rows.size(); ++i) {
    const std::vector<double> row{u.rows[i][0], u.rows[i][1], u.rows[i][2]};
    const std::vector<double> plus{ideal.positive[0], ideal.positive[1],
                                   ideal.positive[2]};
    const std::vector<double> minus{ideal.negative[0], ideal.negative[1],
                                    ideal.negative[2]};
    const double dp = oracles::mahalanobis_direct(row, plus, w, sigma);
    const double dm = oracles::mahalanobis_direct(row, minus, w, sigma);
    CHECK(th[i] == doctest::Approx(dp / (dp + dm)).epsilon(1e-10));
  }
}

TEST_CASE("pick_compromise argmin and ties") {
  CHECK(pick_compromise({0.4, 0.1, 0.9}) == 1);
  CHECK(pick_compromise({0.5, 0.5, 0.5}) == 0);
  CHECK_THROWS_AS(pick_compromise({}), std::invalid_argument);

  std::mt19937_64 rng(89);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> th(7);
    for (auto& v : th) v = unit(rng);
    std::size_t expected = 0;
    for (std::size_t i = 1; i < th.size(); ++i) {
      if (th[i] < th[expected]) expected = i;
    }
    CHECK(pick_compromise(th) == expected);
  }
}

TEST_CASE("uniform weight scaling leaves the argmin unchanged") {
  std::mt19937_64 rng(97);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  EvaluationMatrix u;
  u.rows = {{0.0, 0.0, 0.0}, {1.0, 1.0, 1.0}};
  for (int i = 0; i < 6; ++i) {
    u.rows.push_back({unit(rng), unit(rng), unit(rng)});
  }
  Covariance cov{};
  cov[0] = {1.5, 0.2, 0.1};
  cov[1] = {0.2, 1.1, 0.3};
  cov[2] = {0.1, 0.3, 0.9};

  CompromiseConfig base;
  base.weights = {0.4, 0.3, 0.3};
  base.lambda_reg = 1e-8;
  const auto pick_base = pick_compromise(closeness(u, base, cov));

  for (const double k : {0.1, 3.0, 250.0}) {
    CompromiseConfig scaled = base;
    for (auto& w : scaled.weights) w *= k;
    CHECK(pick_compromise(closeness(u, scaled, cov)) == pick_base);
  }
}

TEST_CASE("regularization clamps ill-conditioned covariances") {
  Covariance nearly_singular{};
  nearly_singular[0] = {1.0, 1.0, 0.0};
  nearly_singular[1] = {1.0, 1.0, 0.0};
  nearly_singular[2] = {0.0, 0.0, 1e-14};

  const auto reg = regularize_covariance(nearly_singular, 1e-8, 1e8);
  // after regularization the closeness computation must not explode
  EvaluationMatrix u;
  u.rows = {{0.0, 0.0, 0.0}, {1.0, 1.0, 1.0}, {0.2, 0.6, 0.4}};
  CompromiseConfig config;
  const auto th = closeness(u, config, reg);
  for (double v : th) {
    CHECK(std::isfinite(v));
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
}

TEST_CASE("zero covariance is rescued by shrinkage") {
  Covariance zero{};
  EvaluationMatrix u;
  u.rows = {{0.0, 0.0, 0.0}, {1.0, 1.0, 1.0}};
  CompromiseConfig config;
  config.lambda_reg = 0.0;
  const auto th = closeness(u, config, zero);
  CHECK(th[0] == doctest::Approx(0.0));
  CHECK(th[1] == doctest::Approx(1.0));
}

TEST_CASE("an unsatisfiable condition bound is an error") {
  Covariance cov = identity();
  // even the identity exceeds a condition bound below 1
  CHECK_THROWS_AS(regularize_covariance(cov, 0.0, 0.5), std::domain_error);
}

TEST_CASE("evaluation covariance matches a hand computation") {
  EvaluationMatrix u;
  u.rows = {{0.0, 1.0, 0.0}, {1.0, 0.0, 1.0}};
  const auto cov = evaluation_covariance(u);
  // two points, sample covariance: var = 0.5 per column
  CHECK(cov[0][0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(cov[1][1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(cov[0][1] == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(cov[0][2] == doctest::Approx(0.5).epsilon(1e-12));
}
