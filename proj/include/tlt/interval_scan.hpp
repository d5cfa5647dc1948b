#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tlt/proportion.hpp"
#include "tlt/thresholds.hpp"

namespace tlt {

// A per-probe signal track, e.g. SNP-array Log R ratios.
struct Track {
  std::vector<std::int64_t> positions;  // strictly increasing probe ids
  std::vector<double> values;
};

// start/end are offsets into the track (0-based, inclusive); length in probes
// is end - start + 1 and never exceeds the scan's max length.
struct IntervalStat {
  std::size_t start = 0;
  std::size_t end = 0;
  double statistic = 0.0;  // interval sum / sqrt(probe count)
  double p_value = 1.0;
  bool pruned = false;
};

enum class ScanTail { Lower, TwoSided };

// Robust standardization: subtract the median, divide by the
// normal-consistent MAD scale (1.4826 * median absolute deviation).
// Throws InputError when the scale is degenerate.
Track normalize(const Track& track);

// One statistic per contiguous window of 1..min(max_length, n_probes) probes,
// emitted by start then length. Lower tail: p = Phi(statistic); two-sided:
// p = 2 Phi(-|statistic|).
std::vector<IntervalStat> scan_intervals(const Track& track,
                                         std::size_t max_length,
                                         ScanTail tail = ScanTail::Lower);

// Number of windows scanned: sum over lengths of (n_probes - length + 1).
std::size_t interval_count(std::size_t n_probes, std::size_t max_length);

// Greedy minimum-p selection: keep the smallest-p interval, drop everything
// sharing a probe with it, repeat. Ties break on smaller start, then shorter
// length. Returns the kept intervals sorted by start.
std::vector<IntervalStat> prune_overlaps(const std::vector<IntervalStat>& stats);

// Prior-bounds TLT over the kept intervals' p-values (n = kept count); the
// partition indices refer to positions in `kept`.
TltResult categorize_intervals(const std::vector<IntervalStat>& kept,
                               const PriorBounds& bounds, double alpha_n,
                               double beta_n);

}  // namespace tlt
