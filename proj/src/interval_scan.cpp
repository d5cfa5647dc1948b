#include "tlt/interval_scan.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "tlt/errors.hpp"
#include "tlt/stats_math.hpp"

namespace tlt {

namespace {

// Normal-consistent MAD factor.
constexpr double kMadScale = 1.4826;

void validate_track(const Track& track) {
  if (track.values.size() != track.positions.size()) {
    throw InputError("track: positions and values differ in length");
  }
  if (track.values.size() < 2) {
    throw InputError("track: need at least 2 probes");
  }
  for (std::size_t i = 0; i < track.values.size(); ++i) {
    if (!std::isfinite(track.values[i])) {
      throw InputError("track: non-finite value at row " + std::to_string(i));
    }
    if (i > 0 && track.positions[i] <= track.positions[i - 1]) {
      throw InputError("track: positions must be strictly increasing (row " +
                       std::to_string(i) + ")");
    }
  }
}

double vector_median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  if (v.size() % 2 == 1) return v[mid];
  return 0.5 * (v[mid - 1] + v[mid]);
}

}  // namespace

Track normalize(const Track& track) {
  validate_track(track);
  const double center = vector_median(track.values);
  std::vector<double> dev;
  dev.reserve(track.values.size());
  for (const double v : track.values) dev.push_back(std::fabs(v - center));
  const double scale = kMadScale * vector_median(std::move(dev));
  if (!(scale > 0.0)) {
    throw InputError("normalize: degenerate scale (more than half the track is constant)");
  }
  Track out;
  out.positions = track.positions;
  out.values.reserve(track.values.size());
  for (const double v : track.values) out.values.push_back((v - center) / scale);
  return out;
}

std::size_t interval_count(std::size_t n_probes, std::size_t max_length) {
  const std::size_t lmax = std::min(max_length, n_probes);
  std::size_t count = 0;
  for (std::size_t len = 1; len <= lmax; ++len) count += n_probes - len + 1;
  return count;
}

std::vector<IntervalStat> scan_intervals(const Track& track,
                                         std::size_t max_length, ScanTail tail) {
  validate_track(track);
  if (max_length < 1) throw InputError("scan_intervals: max_length must be >= 1");
  const std::size_t n = track.values.size();
  std::vector<double> prefix(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + track.values[i];

  std::vector<IntervalStat> stats;
  stats.reserve(interval_count(n, max_length));
  for (std::size_t start = 0; start < n; ++start) {
    const std::size_t longest = std::min(max_length, n - start);
    for (std::size_t len = 1; len <= longest; ++len) {
      IntervalStat iv;
      iv.start = start;
      iv.end = start + len - 1;
      iv.statistic = (prefix[start + len] - prefix[start]) /
                     std::sqrt(static_cast<double>(len));
      iv.p_value = tail == ScanTail::Lower
                       ? std_normal_cdf(iv.statistic)
                       : 2.0 * std_normal_cdf(-std::fabs(iv.statistic));
      if (iv.p_value > 1.0) iv.p_value = 1.0;
      stats.push_back(iv);
    }
  }
  return stats;
}

std::vector<IntervalStat> prune_overlaps(const std::vector<IntervalStat>& stats) {
  if (stats.empty()) return {};
  std::vector<std::size_t> order(stats.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&stats](std::size_t a, std::size_t b) {
    const IntervalStat& x = stats[a];
    const IntervalStat& y = stats[b];
    if (x.p_value != y.p_value) return x.p_value < y.p_value;
    if (x.start != y.start) return x.start < y.start;
    return x.end - x.start < y.end - y.start;
  });

  std::size_t max_end = 0;
  for (const IntervalStat& iv : stats) max_end = std::max(max_end, iv.end);
  std::vector<bool> claimed(max_end + 1, false);

  std::vector<IntervalStat> kept;
  for (const std::size_t idx : order) {
    const IntervalStat& iv = stats[idx];
    bool overlaps = false;
    for (std::size_t pos = iv.start; pos <= iv.end && !overlaps; ++pos) {
      overlaps = claimed[pos];
    }
    if (overlaps) continue;
    for (std::size_t pos = iv.start; pos <= iv.end; ++pos) claimed[pos] = true;
    IntervalStat keep = iv;
    keep.pruned = false;
    kept.push_back(keep);
  }
  std::sort(kept.begin(), kept.end(),
            [](const IntervalStat& a, const IntervalStat& b) {
              return a.start < b.start;
            });
  return kept;
}

TltResult categorize_intervals(const std::vector<IntervalStat>& kept,
                               const PriorBounds& bounds, double alpha_n,
                               double beta_n) {
  if (kept.empty()) return TltResult{};
  std::vector<double> pvalues;
  pvalues.reserve(kept.size());
  for (const IntervalStat& iv : kept) pvalues.push_back(iv.p_value);
  TltConfig cfg;
  cfg.alpha_n = alpha_n;
  cfg.beta_n = beta_n;
  cfg.bounds = bounds;
  return categorize(PValueSample(std::move(pvalues)), cfg);
}

}  // namespace tlt
