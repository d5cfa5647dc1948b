#include "tlt/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "tlt/baselines.hpp"
#include "tlt/errors.hpp"
#include "tlt/rng.hpp"
#include "tlt/stats_math.hpp"
#include "tlt/thresholds.hpp"

namespace tlt {

namespace {

constexpr std::uint64_t kPresetSeedStride = 1'000'000;

std::size_t signal_count(const Scenario& sc) {
  return static_cast<std::size_t>(std::llround(sc.pi * static_cast<double>(sc.n)));
}

void validate_scenario(const Scenario& sc) {
  if (sc.n < 2) throw InputError("generate: scenario needs n >= 2");
  if (!(sc.pi > 0.0 && sc.pi < 1.0) || signal_count(sc) < 1) {
    throw InputError("generate: need pi in (0, 1) with round(pi * n) >= 1");
  }
  if (!std::isfinite(sc.mu)) throw InputError("generate: mu must be finite");
  if (const auto* hg = std::get_if<HeteroGammaNoise>(&sc.noise)) {
    if (!(hg->theta > 0.0)) throw InputError("generate: theta must be positive");
    if (!(hg->hetero_fraction >= 0.0 && hg->hetero_fraction < 1.0)) {
      throw InputError("generate: hetero_fraction must lie in [0, 1)");
    }
  }
  if (const auto* ar = std::get_if<Ar1>(&sc.dependence)) {
    if (!(ar->a >= 0.0 && ar->a < 1.0)) {
      throw InputError("generate: AR(1) parameter must lie in [0, 1)");
    }
  }
}

ProcedureSummary summarize(const std::vector<RepRecord>& recs,
                           RunMetrics RepRecord::*member, MadKind mad) {
  std::vector<double> cutoff, fp, fn;
  cutoff.reserve(recs.size());
  fp.reserve(recs.size());
  fn.reserve(recs.size());
  for (const RepRecord& r : recs) {
    const RunMetrics& m = r.*member;
    cutoff.push_back(static_cast<double>(m.cutoff));
    fp.push_back(static_cast<double>(m.fp));
    fn.push_back(static_cast<double>(m.fn));
  }
  ProcedureSummary s;
  s.cutoff_median = median_of(cutoff);
  s.cutoff_mad = mad_about_median(cutoff, mad);
  s.fp_median = median_of(fp);
  s.fp_mad = mad_about_median(fp, mad);
  s.fn_median = median_of(fn);
  s.fn_mad = mad_about_median(fn, mad);
  return s;
}

}  // namespace

PValueSample generate(const Scenario& scenario) {
  validate_scenario(scenario);
  const std::size_t n = scenario.n;
  Rng rng(scenario.seed);

  // Draw order is fixed: innovations, signal positions, heterogeneous noise
  // positions and scales.
  std::vector<double> innovations(n);
  for (double& z : innovations) z = rng.normal();

  const std::size_t n_signals = signal_count(scenario);
  std::vector<Label> labels(n, Label::Noise);
  for (const std::size_t idx : rng.sample_without_replacement(n, n_signals)) {
    labels[idx] = Label::Signal;
  }

  if (const auto* hg = std::get_if<HeteroGammaNoise>(&scenario.noise)) {
    const std::size_t n_hetero = static_cast<std::size_t>(
        std::llround(hg->hetero_fraction * static_cast<double>(n)));
    std::vector<std::size_t> noise_positions;
    noise_positions.reserve(n - n_signals);
    for (std::size_t i = 0; i < n; ++i) {
      if (labels[i] == Label::Noise) noise_positions.push_back(i);
    }
    if (n_hetero > noise_positions.size()) {
      throw InputError("generate: hetero_fraction leaves no room for signals");
    }
    for (const std::size_t pick :
         rng.sample_without_replacement(noise_positions.size(), n_hetero)) {
      innovations[noise_positions[pick]] *= rng.gamma_shape2(hg->theta);
    }
  }

  double a = 0.0;
  if (const auto* ar = std::get_if<Ar1>(&scenario.dependence)) a = ar->a;
  std::vector<double> x(n);
  x[0] = innovations[0];
  const double innovation_scale = std::sqrt(1.0 - a * a);
  for (std::size_t i = 1; i < n; ++i) {
    x[i] = a * x[i - 1] + innovation_scale * innovations[i];
  }

  std::vector<double> pvalues(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (labels[i] == Label::Signal) x[i] += scenario.mu;
    pvalues[i] = std_normal_cdf(-x[i]);  // upper-tail p-value
  }
  return PValueSample(std::move(pvalues), std::move(labels));
}

RunMetrics evaluate_run(const PValueSample& sample, std::size_t cutoff_rank) {
  if (!sample.has_labels()) {
    throw InputError("evaluate_run: sample has no labels");
  }
  const std::size_t n = sample.size();
  if (cutoff_rank > n) {
    throw InputError("evaluate_run: cutoff rank exceeds sample size");
  }
  RunMetrics m;
  m.cutoff = cutoff_rank;
  for (std::size_t r = 0; r < cutoff_rank; ++r) {
    if (sample.label_at_rank(r) == Label::Noise) ++m.fp;
  }
  for (std::size_t r = cutoff_rank; r < n; ++r) {
    if (sample.label_at_rank(r) == Label::Signal) ++m.fn;
  }
  return m;
}

SummaryTable run_experiment(const std::vector<Scenario>& scenarios,
                            std::size_t reps, const ExperimentOptions& options) {
  if (reps < 1) throw InputError("run_experiment: need reps >= 1");
  SummaryTable table;
  table.reps = reps;
  for (const Scenario& base : scenarios) {
    SummaryRow row;
    row.key = base.label;
    row.scenario = base;
    row.replications.reserve(reps);
    for (std::size_t rep = 0; rep < reps; ++rep) {
      Scenario sc = base;
      sc.seed = base.seed + rep;
      const PValueSample sample = generate(sc);
      const std::size_t n = sample.size();
      TltConfig cfg;
      cfg.alpha_n = options.alpha_n.value_or(tolerance_half_log(n));
      cfg.beta_n = options.beta_n.value_or(tolerance_half_log(n));
      const TltResult tlt = categorize(sample, cfg);

      RepRecord rec;
      rec.seed = sc.seed;
      rec.pi_hat = tlt.pi_used;
      rec.d_star = evaluate_run(sample, tlt.d_star);
      rec.d_star_star = evaluate_run(sample, tlt.d_star_star);
      rec.t_fdr =
          evaluate_run(sample, bh_fdr(sample, options.fdr_alpha).cutoff_rank);
      rec.t_afdr = evaluate_run(
          sample,
          adaptive_fdr(sample, options.fdr_alpha, tlt.pi_used).cutoff_rank);
      row.replications.push_back(rec);
    }
    row.d_star = summarize(row.replications, &RepRecord::d_star, options.mad);
    row.t_fdr = summarize(row.replications, &RepRecord::t_fdr, options.mad);
    row.t_afdr = summarize(row.replications, &RepRecord::t_afdr, options.mad);
    row.d_star_star =
        summarize(row.replications, &RepRecord::d_star_star, options.mad);
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::vector<Scenario> preset_scenarios(const std::string& name,
                                       std::uint64_t seed) {
  std::vector<Scenario> out;
  auto add = [&](Scenario sc) {
    sc.seed = seed + out.size() * kPresetSeedStride;
    out.push_back(std::move(sc));
  };
  if (name == "table1") {
    for (const double mu : {2.5, 3.5, 4.5, 5.5}) {
      add({"mu=" + std::to_string(mu).substr(0, 3), 10000, 0.01, mu,
           UnitNormalNoise{}, IndependentObs{}, 0});
    }
  } else if (name == "table2") {
    for (const double pi : {0.01, 0.05, 0.10, 0.20}) {
      add({"|S1|=" + std::to_string(static_cast<int>(pi * 10000)), 10000, pi,
           3.0, UnitNormalNoise{}, IndependentObs{}, 0});
    }
  } else if (name == "table3" || name == "table3alt") {
    const double mu = name == "table3" ? 3.5 : 3.6;
    for (const double theta : {0.5, 1.0, 1.5, 2.0}) {
      add({"theta=" + std::to_string(theta).substr(0, 3), 10000, 0.01, mu,
           HeteroGammaNoise{theta, 0.10}, IndependentObs{}, 0});
    }
  } else if (name == "table5") {
    for (const double a : {0.0, 0.5, 0.7, 0.9}) {
      add({"a=" + std::to_string(a).substr(0, 3), 1000, 0.05, 3.0,
           UnitNormalNoise{}, Ar1{a}, 0});
    }
  } else {
    throw InputError("unknown preset '" + name + "'");
  }
  return out;
}

ExperimentOptions preset_options(const std::string& name) {
  ExperimentOptions opts;
  if (name == "table5") {
    // Published setting: alpha_n = beta_n = 1 / log n at n = 1000.
    opts.alpha_n = tolerance_log(1000);
    opts.beta_n = tolerance_log(1000);
  } else if (name != "table1" && name != "table2" && name != "table3" &&
             name != "table3alt") {
    throw InputError("unknown preset '" + name + "'");
  }
  return opts;
}

std::vector<std::string> preset_names() {
  return {"table1", "table2", "table3", "table3alt", "table5"};
}

double median_of(std::vector<double> values) {
  if (values.empty()) throw InputError("median_of: empty input");
  std::sort(values.begin(), values.end());
  return values[(values.size() - 1) / 2];
}

double mad_about_median(const std::vector<double>& values, MadKind kind) {
  const double med = median_of(values);
  std::vector<double> dev;
  dev.reserve(values.size());
  for (const double v : values) dev.push_back(std::fabs(v - med));
  if (kind == MadKind::MedianAbsoluteDeviation) return median_of(dev);
  double sum = 0.0;
  for (const double d : dev) sum += d;
  return sum / static_cast<double>(dev.size());
}

}  // namespace tlt
