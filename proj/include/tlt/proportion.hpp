#pragma once

#include <cstddef>

#include "tlt/sample.hpp"

namespace tlt {

// Meinshausen-Rice lower-bound estimate of the signal proportion.
struct ProportionEstimate {
  double pi_hat = 0.0;           // raw_value clamped to [0, 1 - 1/n]
  std::size_t argmax_index = 0;  // 1-based rank attaining the max; 0 if none
  double raw_value = 0.0;        // pre-clamp maximum, may be negative
};

// Prior bracket for the signal proportion: 0 <= pi_minus <= pi_plus < 1.
struct PriorBounds {
  double pi_minus = 0.0;
  double pi_plus = 0.0;
};

// pi-hat = max over integer ranks 1 < i < n/2 of
//   (i/n - p_(i) - sqrt(2 log log n / n) * sqrt(p_(i)(1-p_(i)))) / (1 - p_(i)),
// clamped below at 0 and above at 1 - 1/n. Requires n >= 8.
ProportionEstimate estimate_pi_mr(const PValueSample& sample);

// Returns bounds unchanged when the invariants hold, throws InputError else.
PriorBounds validate_bounds(const PriorBounds& bounds, std::size_t n);

}  // namespace tlt
