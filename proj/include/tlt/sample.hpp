#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace tlt {

enum class Label : unsigned char { Noise = 0, Signal = 1 };

// A batch of p-values kept in input order together with its ascending rank
// order. The sort is stable, so tied values keep their input order.
class PValueSample {
 public:
  explicit PValueSample(std::vector<double> values,
                        std::optional<std::vector<Label>> labels = std::nullopt);

  std::size_t size() const { return values_.size(); }

  // Input order.
  const std::vector<double>& values() const { return values_; }

  // Ascending order.
  const std::vector<double>& sorted() const { return sorted_; }

  // rank (0-based) -> original index; a bijection on {0, ..., n-1}.
  const std::vector<std::size_t>& sort_permutation() const { return perm_; }

  bool has_labels() const { return labels_.has_value(); }

  // Input order; throws InputError when absent.
  const std::vector<Label>& labels() const;

  Label label_at_rank(std::size_t rank) const;

 private:
  std::vector<double> values_;
  std::vector<double> sorted_;
  std::vector<std::size_t> perm_;
  std::optional<std::vector<Label>> labels_;
};

}  // namespace tlt
