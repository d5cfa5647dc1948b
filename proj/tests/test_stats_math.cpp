#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "tlt/errors.hpp"
#include "tlt/rng.hpp"
#include "tlt/stats_math.hpp"

using tlt::beta_quantile;
using tlt::order_stat_quantile;
using tlt::reg_inc_beta;
using tlt::std_normal_cdf;

TEST_CASE("normal cdf at pinned points") {
  CHECK(std_normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(1.0 - std_normal_cdf(10.0) <= 1e-15);
  // high-precision erf oracle (mpmath, 40 digits)
  CHECK(std_normal_cdf(1.96) == doctest::Approx(0.9750021048517796).epsilon(1e-13));
  CHECK(std_normal_cdf(-3.0) == doctest::Approx(0.0013498980316300945).epsilon(1e-12));
}

TEST_CASE("normal cdf symmetry and monotonicity") {
  double prev = -1.0;
  for (double z = -8.0; z <= 8.0; z += 0.173) {
    const double phi = std_normal_cdf(z);
    CHECK(std::fabs(phi - (1.0 - std_normal_cdf(-z))) <= 1e-14);
    CHECK(phi >= prev);
    prev = phi;
  }
}

TEST_CASE("normal cdf rejects non-finite input") {
  CHECK_THROWS_AS(std_normal_cdf(std::nan("")), std::domain_error);
  CHECK_THROWS_AS(std_normal_cdf(INFINITY), std::domain_error);
}

TEST_CASE("incomplete beta closed forms") {
  CHECK(reg_inc_beta(1, 1, 0.3) == doctest::Approx(0.3).epsilon(1e-14));
  // minimum of m uniforms: I_x(1, m) = 1 - (1-x)^m
  CHECK(reg_inc_beta(1, 4, 0.5) == doctest::Approx(0.9375).epsilon(1e-13));
  CHECK(reg_inc_beta(2, 2, 0.5) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(reg_inc_beta(4, 2, 0.7) == doctest::Approx(0.52822).epsilon(1e-12));
  CHECK(reg_inc_beta(8, 3, 0.2) == doctest::Approx(7.79264e-5).epsilon(1e-10));
  // mpmath oracle, non-integer parameters
  CHECK(reg_inc_beta(2.5, 3.5, 0.3) ==
        doctest::Approx(0.2967529892956664).epsilon(1e-12));
  CHECK(reg_inc_beta(3, 7, 0.0) == 0.0);
  CHECK(reg_inc_beta(3, 7, 1.0) == 1.0);
}

TEST_CASE("incomplete beta domain errors") {
  CHECK_THROWS_AS(reg_inc_beta(0.0, 1.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(reg_inc_beta(1.0, -2.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(reg_inc_beta(1.0, 1.0, 1.5), std::domain_error);
  CHECK_THROWS_AS(reg_inc_beta(1.0, 1.0, std::nan("")), std::domain_error);
}

TEST_CASE("incomplete beta symmetry and monotonicity properties") {
  tlt::Rng rng(9001);
  for (int trial = 0; trial < 1000; ++trial) {
    const double a = 0.2 + 30.0 * rng.uniform01();
    const double b = 0.2 + 30.0 * rng.uniform01();
    const double x = rng.uniform01();
    CHECK(std::fabs(reg_inc_beta(a, b, x) -
                    (1.0 - reg_inc_beta(b, a, 1.0 - x))) <= 1e-12);
  }
  for (int trial = 0; trial < 50; ++trial) {
    const double a = 0.5 + 10.0 * rng.uniform01();
    const double b = 0.5 + 10.0 * rng.uniform01();
    double prev = -1.0;
    for (double x = 0.0; x <= 1.0; x += 0.02) {
      const double v = reg_inc_beta(a, b, x);
      CHECK(v >= prev);
      prev = v;
    }
  }
}

TEST_CASE("order statistic quantile pinned values") {
  CHECK(order_stat_quantile({1, 1}, 0.25) == doctest::Approx(0.25).epsilon(1e-12));
  // closed form 1 - (1-q)^(1/m)
  CHECK(order_stat_quantile({1, 100}, 0.05) ==
        doctest::Approx(5.128014162622921e-4).epsilon(1e-10));
  CHECK(order_stat_quantile({1, 90}, 0.05) ==
        doctest::Approx(5.697631165101116e-4).epsilon(1e-10));
  // median of a symmetric Beta
  CHECK(order_stat_quantile({5, 9}, 0.5) == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("beta quantile against mpmath oracle") {
  CHECK(beta_quantile(2, 3, 0.4) ==
        doctest::Approx(0.32916650337840787).epsilon(1e-10));
  CHECK(beta_quantile(2, 2, 0.8) ==
        doctest::Approx(0.7128592745832595).epsilon(1e-10));
  CHECK(beta_quantile(3, 2, 0.001) ==
        doctest::Approx(0.06403813910283337).epsilon(1e-10));
  CHECK(beta_quantile(0.9, 0.9, 0.1) ==
        doctest::Approx(0.0859772604256979).epsilon(1e-10));
  // real-valued second parameter, as used by the step-down search
  CHECK(beta_quantile(4, 9996.5, 0.05) ==
        doctest::Approx(1.3664983515786613e-4).epsilon(1e-8));
}

TEST_CASE("beta quantile domain errors") {
  CHECK_THROWS_AS(beta_quantile(2, 3, 0.0), std::domain_error);
  CHECK_THROWS_AS(beta_quantile(2, 3, 1.0), std::domain_error);
  CHECK_THROWS_AS(order_stat_quantile({5, 4}, 0.5), std::domain_error);
  CHECK_THROWS_AS(order_stat_quantile({0, 4}, 0.5), std::domain_error);
}

TEST_CASE("quantile round-trips through the cdf") {
  tlt::Rng rng(4242);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t m = 1 + static_cast<std::size_t>(rng.below(2000));
    const std::size_t j = 1 + static_cast<std::size_t>(rng.below(m));
    const double q = 0.001 + 0.998 * rng.uniform01();
    const double x = order_stat_quantile({j, m}, q);
    const double back =
        reg_inc_beta(static_cast<double>(j), static_cast<double>(m - j + 1), x);
    CHECK(std::fabs(back - q) <= 1e-9);
  }
}

TEST_CASE("quantile is monotone in q and in j") {
  for (const std::size_t m : {7ul, 40ul, 500ul}) {
    for (std::size_t j = 1; j <= m; j += std::max<std::size_t>(1, m / 5)) {
      double prev = 0.0;
      for (double q = 0.05; q < 1.0; q += 0.05) {
        const double x = order_stat_quantile({j, m}, q);
        CHECK(x > prev);
        prev = x;
      }
    }
    double prev_j = 0.0;
    for (std::size_t j = 1; j <= m; ++j) {
      const double x = order_stat_quantile({j, m}, 0.3);
      CHECK(x > prev_j);
      prev_j = x;
    }
  }
}

TEST_CASE("order statistic law matches simulation within DKW bands") {
  // 3rd smallest of 7 uniforms vs Beta(3, 5), 1e5 replications.
  constexpr std::size_t kReps = 100000;
  constexpr std::size_t kJ = 3, kM = 7;
  tlt::Rng rng(20240817);
  std::vector<double> draws;
  draws.reserve(kReps);
  std::vector<double> u(kM);
  for (std::size_t rep = 0; rep < kReps; ++rep) {
    for (auto& v : u) v = rng.uniform01();
    std::nth_element(u.begin(), u.begin() + (kJ - 1), u.end());
    draws.push_back(u[kJ - 1]);
  }
  std::sort(draws.begin(), draws.end());
  // DKW at delta = 1e-6
  const double eps = std::sqrt(std::log(2.0 / 1e-6) / (2.0 * kReps));
  double worst = 0.0;
  for (std::size_t i = 0; i < draws.size(); i += 97) {
    const double ecdf = static_cast<double>(i + 1) / kReps;
    const double model = reg_inc_beta(kJ, kM - kJ + 1, draws[i]);
    worst = std::max(worst, std::fabs(ecdf - model));
  }
  CHECK(worst <= eps);
}
