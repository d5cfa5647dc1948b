#include "tlt/baselines.hpp"

#include <stdexcept>
#include <vector>

#include "tlt/errors.hpp"

namespace tlt {

namespace {

std::size_t step_up_rank(const std::vector<double>& sorted, double slope) {
  for (std::size_t i = sorted.size(); i >= 1; --i) {
    if (sorted[i - 1] <= static_cast<double>(i) * slope) return i;
  }
  return 0;
}

}  // namespace

FdrCutoff bh_fdr(const PValueSample& sample, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::domain_error("bh_fdr: alpha must lie in (0, 1)");
  }
  const double slope = alpha / static_cast<double>(sample.size());
  return FdrCutoff{step_up_rank(sample.sorted(), slope), alpha, std::nullopt};
}

FdrCutoff adaptive_fdr(const PValueSample& sample, double alpha, double pi_hat) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::domain_error("adaptive_fdr: alpha must lie in (0, 1)");
  }
  if (!(pi_hat >= 0.0 && pi_hat < 1.0)) {
    throw std::domain_error("adaptive_fdr: pi_hat must lie in [0, 1)");
  }
  const double slope =
      alpha / ((1.0 - pi_hat) * static_cast<double>(sample.size()));
  return FdrCutoff{step_up_rank(sample.sorted(), slope), alpha, pi_hat};
}

}  // namespace tlt
