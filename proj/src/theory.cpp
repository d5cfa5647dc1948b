#include "tlt/theory.hpp"

#include <cmath>
#include <string>

#include "tlt/errors.hpp"

namespace tlt {

double MixtureCalibration::pi() const {
  if (n < 2 || !(beta_sparsity > 0.0 && beta_sparsity < 1.0)) {
    throw InputError("MixtureCalibration: need n >= 2 and beta in (0, 1)");
  }
  return std::pow(static_cast<double>(n), -beta_sparsity);
}

double MixtureCalibration::mu() const {
  if (n < 2 || !(r_strength > 0.0)) {
    throw InputError("MixtureCalibration: need n >= 2 and r > 0");
  }
  return std::sqrt(2.0 * r_strength * std::log(static_cast<double>(n)));
}

ExistenceBoundaries existence_boundaries(std::size_t s0, std::size_t s1,
                                         double eps) {
  if (s0 < 2 || s1 < 1 || !(eps > 0.0)) {
    throw InputError("existence_boundaries: need s0 >= 2, s1 >= 1, eps > 0");
  }
  const double log_s0 = std::log(static_cast<double>(s0));
  const double log_s1 = std::log(static_cast<double>(s1));
  ExistenceBoundaries out;
  out.mu_signal_lower =
      std::sqrt(2.0 * (1.0 + eps) * log_s0) - std::sqrt(2.0 * log_s1);
  out.mu_indist_upper =
      std::sqrt(2.0 * (1.0 - eps) * log_s0) + std::sqrt(2.0 * log_s1);
  out.noise_condition_holds = log_s1 <= (1.0 - eps) * log_s0;
  return out;
}

std::pair<double, double> recovery_region(double beta_sparsity) {
  if (!(beta_sparsity > 0.0 && beta_sparsity < 1.0)) {
    throw InputError("recovery_region: beta must lie in (0, 1), got " +
                     std::to_string(beta_sparsity));
  }
  const double root = std::sqrt(1.0 - beta_sparsity);
  return {(1.0 - root) * (1.0 - root), (1.0 + root) * (1.0 + root)};
}

}  // namespace tlt
