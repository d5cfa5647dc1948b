#include "tlt/sample.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "tlt/errors.hpp"

namespace tlt {

PValueSample::PValueSample(std::vector<double> values,
                           std::optional<std::vector<Label>> labels)
    : values_(std::move(values)), labels_(std::move(labels)) {
  if (values_.empty()) {
    throw InputError("PValueSample: need at least one p-value");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double p = values_[i];
    if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
      throw InputError("PValueSample: value " + std::to_string(p) +
                       " at index " + std::to_string(i) +
                       " is not a probability in [0, 1]");
    }
  }
  if (labels_ && labels_->size() != values_.size()) {
    throw InputError("PValueSample: labels length " +
                     std::to_string(labels_->size()) +
                     " does not match " + std::to_string(values_.size()) +
                     " values");
  }
  perm_.resize(values_.size());
  std::iota(perm_.begin(), perm_.end(), std::size_t{0});
  std::stable_sort(perm_.begin(), perm_.end(),
                   [this](std::size_t a, std::size_t b) {
                     return values_[a] < values_[b];
                   });
  sorted_.reserve(values_.size());
  for (const std::size_t idx : perm_) sorted_.push_back(values_[idx]);
}

const std::vector<Label>& PValueSample::labels() const {
  if (!labels_) throw InputError("PValueSample: sample has no labels");
  return *labels_;
}

Label PValueSample::label_at_rank(std::size_t rank) const {
  return labels().at(perm_.at(rank));
}

}  // namespace tlt
