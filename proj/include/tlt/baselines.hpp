#pragma once

#include <cstddef>
#include <optional>

#include "tlt/sample.hpp"

namespace tlt {

struct FdrCutoff {
  std::size_t cutoff_rank = 0;  // in [0, n]
  double alpha = 0.0;
  std::optional<double> pi_hat_used;
};

// Benjamini-Hochberg step-up: max{i : p_(i) <= i alpha / n}, 0 when none.
FdrCutoff bh_fdr(const PValueSample& sample, double alpha);

// Null-proportion plug-in correction: max{i : p_(i) <= i alpha / ((1-pi) n)}.
// With pi_hat = 0 this matches bh_fdr exactly.
FdrCutoff adaptive_fdr(const PValueSample& sample, double alpha, double pi_hat);

}  // namespace tlt
