#include "tlt/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tlt/errors.hpp"
#include "tlt/stats_math.hpp"

namespace tlt {

double tolerance_half_log(std::size_t n) {
  if (n < 2) return 0.5;
  return std::min(0.5, 1.0 / (2.0 * std::log(static_cast<double>(n))));
}

double tolerance_log(std::size_t n) {
  if (n < 2) return 0.5;
  return std::min(0.5, 1.0 / std::log(static_cast<double>(n)));
}

std::size_t step_down_start(double pi, std::size_t n) {
  if (pi <= 0.0) return 0;
  return static_cast<std::size_t>(std::llround(pi * static_cast<double>(n)));
}

std::pair<std::size_t, std::size_t> true_separations(const PValueSample& sample) {
  const std::size_t n = sample.size();
  if (!sample.has_labels()) {
    throw InputError("true_separations: sample has no labels");
  }
  std::size_t first_noise = 0;  // 1-based rank, 0 while unseen
  std::size_t last_signal = 0;
  for (std::size_t r = 0; r < n; ++r) {
    const Label lab = sample.label_at_rank(r);
    if (lab == Label::Noise && first_noise == 0) first_noise = r + 1;
    if (lab == Label::Signal) last_signal = r + 1;
  }
  const std::size_t d_star = first_noise == 0 ? n : first_noise - 1;
  return {d_star, last_signal};
}

std::size_t d_star_hat(const PValueSample& sample, double pi_for_denominator,
                       double alpha_n) {
  if (!(pi_for_denominator >= 0.0 && pi_for_denominator < 1.0)) {
    throw std::domain_error("d_star_hat: proportion must lie in [0, 1)");
  }
  if (!(alpha_n > 0.0 && alpha_n < 1.0)) {
    throw std::domain_error("d_star_hat: alpha_n must lie in (0, 1)");
  }
  const double threshold =
      alpha_n / ((1.0 - pi_for_denominator) * static_cast<double>(sample.size()));
  const std::vector<double>& p = sample.sorted();
  return static_cast<std::size_t>(
      std::lower_bound(p.begin(), p.end(), threshold) - p.begin());
}

std::size_t d_star_star_hat(const PValueSample& sample, double pi_start,
                            double pi_beta_param, double beta_n,
                            std::size_t d_star) {
  if (!(pi_start >= 0.0 && pi_start < 1.0) ||
      !(pi_beta_param >= 0.0 && pi_beta_param < 1.0)) {
    throw std::domain_error("d_star_star_hat: proportions must lie in [0, 1)");
  }
  if (!(beta_n > 0.0 && beta_n < 1.0)) {
    throw std::domain_error("d_star_star_hat: beta_n must lie in (0, 1)");
  }
  const std::size_t n = sample.size();
  const std::size_t k_start = step_down_start(pi_start, n);
  if (k_start <= d_star) return d_star;
  const double m = (1.0 - pi_beta_param) * static_cast<double>(n);
  const std::vector<double>& p = sample.sorted();
  for (std::size_t j = 1; k_start + j <= n; ++j) {
    const double b = m - static_cast<double>(j) + 1.0;
    if (b < 1.0) return n;
    // p_(k+j) <= F^-1_(j)(beta_n) is tested through the CDF, which avoids a
    // quantile root-find per step.
    if (reg_inc_beta(static_cast<double>(j), b, p[k_start + j - 1]) <= beta_n) {
      return k_start + j;
    }
  }
  return n;
}

TltResult categorize(const PValueSample& sample, const TltConfig& config) {
  if (!(config.alpha_n > 0.0 && config.alpha_n < 1.0) ||
      !(config.beta_n > 0.0 && config.beta_n < 1.0)) {
    throw InputError("categorize: alpha_n and beta_n must lie in (0, 1)");
  }
  const std::size_t n = sample.size();
  double pi_denominator = 0.0;
  double pi_start = 0.0;
  double pi_beta = 0.0;
  if (config.bounds) {
    const PriorBounds b = validate_bounds(*config.bounds, n);
    pi_denominator = b.pi_minus;
    pi_beta = b.pi_minus;
    pi_start = b.pi_plus;
  } else {
    const ProportionEstimate est = estimate_pi_mr(sample);
    pi_denominator = pi_start = pi_beta = est.pi_hat;
  }

  TltResult result;
  result.d_star = d_star_hat(sample, pi_denominator, config.alpha_n);
  result.d_star_star =
      d_star_star_hat(sample, pi_start, pi_beta, config.beta_n, result.d_star);
  result.pi_used = pi_start;
  result.k_start = step_down_start(pi_start, n);

  const std::vector<std::size_t>& perm = sample.sort_permutation();
  result.partition.signal_set.reserve(result.d_star);
  result.partition.indistinguishable_set.reserve(result.d_star_star - result.d_star);
  result.partition.noise_set.reserve(n - result.d_star_star);
  for (std::size_t r = 0; r < n; ++r) {
    if (r < result.d_star) {
      result.partition.signal_set.push_back(perm[r]);
    } else if (r < result.d_star_star) {
      result.partition.indistinguishable_set.push_back(perm[r]);
    } else {
      result.partition.noise_set.push_back(perm[r]);
    }
  }
  return result;
}

}  // namespace tlt
