#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tlt/proportion.hpp"
#include "tlt/sample.hpp"

namespace tlt {

// Tolerance presets from the simulation setup, clamped into (0, 0.5].
double tolerance_half_log(std::size_t n);  // 1 / (2 log n)
double tolerance_log(std::size_t n);       // 1 / log n

struct TltConfig {
  double alpha_n = 0.05;  // false-positive tolerance, in (0, 1)
  double beta_n = 0.05;   // false-negative tolerance, in (0, 1)
  // Engaged: prior-bounds (tilde) variant. Absent: Meinshausen-Rice estimate.
  std::optional<PriorBounds> bounds;
};

struct SubsetPartition {
  std::vector<std::size_t> signal_set;  // original indices, 0-based
  std::vector<std::size_t> indistinguishable_set;
  std::vector<std::size_t> noise_set;
};

struct TltResult {
  std::size_t d_star = 0;
  std::size_t d_star_star = 0;
  double pi_used = 0.0;     // pi-hat, or pi_plus in bounds mode
  std::size_t k_start = 0;  // round(pi_used * n), where the step-down begins
  SubsetPartition partition;
};

// round(pi * n) to the nearest integer, half away from zero.
std::size_t step_down_start(double pi, std::size_t n);

// True separation ranks from labeled data: d* = (rank of first noise) - 1
// (n when no noise exists), d** = rank of last signal (0 when no signal).
std::pair<std::size_t, std::size_t> true_separations(const PValueSample& sample);

// Adaptive Bonferroni cut: #{i : p_(i) < alpha_n / ((1 - pi) n)}.
std::size_t d_star_hat(const PValueSample& sample, double pi_for_denominator,
                       double alpha_n);

// Step-down cut. The search starts at k_start = round(pi_start * n) and stops
// at the smallest j >= 1 with p_(k_start + j) <= F^-1_(j)(beta_n), where
// F_(j) is the Beta(j, (1 - pi_beta_param) n - j + 1) law. Returns d_star when
// k_start <= d_star, and n when the search exhausts the sample or the Beta
// second parameter drops below 1. The two proportions coincide for the
// data-driven variant; the bounds variant starts at pi_plus while the Beta law
// keeps pi_minus.
std::size_t d_star_star_hat(const PValueSample& sample, double pi_start,
                            double pi_beta_param, double beta_n,
                            std::size_t d_star);

// Full two-level thresholding: proportion -> d* -> d** -> rank partition
// (ranks 1..d* signal, d*+1..d** indistinguishable, rest noise, mapped back
// to original indices through the sort permutation).
TltResult categorize(const PValueSample& sample, const TltConfig& config);

}  // namespace tlt
