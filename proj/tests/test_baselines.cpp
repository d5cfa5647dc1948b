#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "brute_force.hpp"
#include "tlt/baselines.hpp"
#include "tlt/proportion.hpp"
#include "tlt/rng.hpp"
#include "tlt/simulation.hpp"
#include "tlt/thresholds.hpp"

using namespace tlt;

TEST_CASE("step-up cutoff by hand") {
  PValueSample sample({0.001, 0.019, 0.04, 0.9});
  CHECK(bh_fdr(sample, 0.05).cutoff_rank == 2);
  CHECK(adaptive_fdr(sample, 0.05, 0.5).cutoff_rank == 3);
  CHECK(bh_fdr(PValueSample(std::vector<double>(5, 1.0)), 0.05).cutoff_rank == 0);
}

TEST_CASE("plug-in with zero proportion reduces to plain step-up") {
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> p(5 + rng.below(50));
    for (auto& v : p) v = rng.uniform01();
    const PValueSample sample(p);
    CHECK(adaptive_fdr(sample, 0.05, 0.0).cutoff_rank ==
          bh_fdr(sample, 0.05).cutoff_rank);
  }
}

TEST_CASE("plug-in cutoff dominates the plain cutoff") {
  Rng rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> p(10 + rng.below(80));
    for (auto& v : p) {
      v = rng.uniform01() < 0.3 ? 1e-4 * rng.uniform01() : rng.uniform01();
    }
    const PValueSample sample(p);
    const double pi_hat = 0.9 * rng.uniform01();
    CHECK(adaptive_fdr(sample, 0.05, pi_hat).cutoff_rank >=
          bh_fdr(sample, 0.05).cutoff_rank);
  }
}

TEST_CASE("shrinking a p-value never lowers the cutoff") {
  Rng rng(23);
  std::vector<double> p(60);
  for (auto& v : p) v = rng.uniform01();
  const std::size_t base = bh_fdr(PValueSample(p), 0.1).cutoff_rank;
  for (int trial = 0; trial < 50; ++trial) {
    auto q = p;
    q[rng.below(q.size())] *= rng.uniform01();
    CHECK(bh_fdr(PValueSample(q), 0.1).cutoff_rank >= base);
  }
}

TEST_CASE("brute-force step-up agreement") {
  Rng rng(24);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> p(8 + rng.below(5));
    for (auto& v : p) {
      v = rng.uniform01() < 0.4 ? 1e-2 * rng.uniform01() : rng.uniform01();
    }
    const PValueSample sample(p);
    const double alpha = 0.01 + 0.4 * rng.uniform01();
    CHECK(bh_fdr(sample, alpha).cutoff_rank ==
          brute::bh_cutoff(sample.sorted(), alpha));
  }
}

TEST_CASE("plain step-up lands between the two thresholding levels") {
  // pi = 0.02, mu = 4: the step-up cutoff sits inside [d*, d**] in nearly
  // every replication.
  Scenario sc{"x", 10000, 0.02, 4.0, UnitNormalNoise{}, IndependentObs{}, 0};
  int between = 0;
  const int reps = 50;
  for (int rep = 0; rep < reps; ++rep) {
    sc.seed = 88000 + rep;
    const PValueSample sample = generate(sc);
    const TltResult res = categorize(
        sample,
        TltConfig{tolerance_half_log(10000), tolerance_half_log(10000), std::nullopt});
    const std::size_t t = bh_fdr(sample, 0.05).cutoff_rank;
    if (res.d_star <= t && t <= res.d_star_star) ++between;
  }
  CHECK(between >= 45);
}

TEST_CASE("alpha validation") {
  PValueSample sample({0.1, 0.2});
  CHECK_THROWS_AS(bh_fdr(sample, 0.0), std::domain_error);
  CHECK_THROWS_AS(adaptive_fdr(sample, 1.0, 0.1), std::domain_error);
  CHECK_THROWS_AS(adaptive_fdr(sample, 0.05, 1.0), std::domain_error);
}
