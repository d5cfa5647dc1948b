#pragma once

#include <cstddef>
#include <utility>

namespace tlt {

// Sparsity/strength calibration pi = n^-beta, mu = sqrt(2 r log n).
struct MixtureCalibration {
  std::size_t n = 2;
  double beta_sparsity = 0.5;  // in (0, 1)
  double r_strength = 1.0;     // > 0

  double pi() const;
  double mu() const;
};

struct ExistenceBoundaries {
  double mu_signal_lower = 0.0;   // signal subset exists above this mu
  double mu_indist_upper = 0.0;   // indistinguishable subset exists below this
  bool noise_condition_holds = false;  // log s1 <= (1 - eps) log s0
};

// Asymptotic existence boundaries for noise/signal counts (s0, s1) at slack
// eps: sqrt(2(1+eps) log s0) - sqrt(2 log s1) and
// sqrt(2(1-eps) log s0) + sqrt(2 log s1).
ExistenceBoundaries existence_boundaries(std::size_t s0, std::size_t s1,
                                         double eps);

// Under the calibration: ((1 - sqrt(1-beta))^2, (1 + sqrt(1-beta))^2), the
// r-range where the signal subset exists resp. the indistinguishable subset
// persists. The interval is the complement of the exact-recovery region.
std::pair<double, double> recovery_region(double beta_sparsity);

}  // namespace tlt
