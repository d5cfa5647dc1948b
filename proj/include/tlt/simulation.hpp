#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tlt/sample.hpp"

namespace tlt {

struct UnitNormalNoise {};

// A hetero_fraction share of all observations becomes heterogeneous noise
// whose sd is drawn per observation from Gamma(shape 2, scale theta).
struct HeteroGammaNoise {
  double theta = 1.0;
  double hetero_fraction = 0.0;
};

using NoiseModel = std::variant<UnitNormalNoise, HeteroGammaNoise>;

struct IndependentObs {};

struct Ar1 {
  double a = 0.0;  // rho_{ij} = a^{|i-j|}
};

using Dependence = std::variant<IndependentObs, Ar1>;

struct Scenario {
  std::string label;
  std::size_t n = 0;
  double pi = 0.0;  // signal proportion; round(pi * n) >= 1
  double mu = 0.0;  // signal mean shift
  NoiseModel noise = UnitNormalNoise{};
  Dependence dependence = IndependentObs{};
  std::uint64_t seed = 0;
};

struct RunMetrics {
  std::size_t fp = 0;      // noise among the top cutoff ranks
  std::size_t fn = 0;      // signals ranked after the cutoff
  std::size_t cutoff = 0;
};

// One replication, all four procedures.
struct RepRecord {
  std::uint64_t seed = 0;
  double pi_hat = 0.0;
  RunMetrics d_star;
  RunMetrics t_fdr;
  RunMetrics t_afdr;
  RunMetrics d_star_star;
};

struct ProcedureSummary {
  double cutoff_median = 0.0, cutoff_mad = 0.0;
  double fp_median = 0.0, fp_mad = 0.0;
  double fn_median = 0.0, fn_mad = 0.0;
};

struct SummaryRow {
  std::string key;
  Scenario scenario;
  ProcedureSummary d_star;
  ProcedureSummary t_fdr;
  ProcedureSummary t_afdr;
  ProcedureSummary d_star_star;
  std::vector<RepRecord> replications;  // replication order
};

struct SummaryTable {
  std::vector<SummaryRow> rows;
  std::size_t reps = 0;
};

enum class MadKind { MeanAbsoluteDeviation, MedianAbsoluteDeviation };

struct ExperimentOptions {
  std::optional<double> alpha_n;  // default 1 / (2 log n)
  std::optional<double> beta_n;   // default 1 / (2 log n)
  double fdr_alpha = 0.05;
  MadKind mad = MadKind::MeanAbsoluteDeviation;
};

// Deterministic sample for a scenario: exactly round(pi * n) signal labels,
// one-sided upper-tail p-values p = 1 - Phi(x). AR(1) dependence is realized
// as x_i = a x_{i-1} + sqrt(1 - a^2) z_i over the noise innovations before
// the signal mean shift, so every marginal keeps unit variance.
PValueSample generate(const Scenario& scenario);

RunMetrics evaluate_run(const PValueSample& sample, std::size_t cutoff_rank);

// Replication loop with derived seeds scenario.seed + rep and median/MAD
// summaries per procedure. Identical inputs give identical tables.
SummaryTable run_experiment(const std::vector<Scenario>& scenarios,
                            std::size_t reps,
                            const ExperimentOptions& options = {});

// Scenario sets for the published simulation studies. Known names:
// table1, table2, table3 (mu = 3.5), table3alt (mu = 3.6), table5.
std::vector<Scenario> preset_scenarios(const std::string& name,
                                       std::uint64_t seed);
ExperimentOptions preset_options(const std::string& name);
std::vector<std::string> preset_names();

// Lower median: the ceil(N/2)-th order statistic.
double median_of(std::vector<double> values);
double mad_about_median(const std::vector<double>& values, MadKind kind);

}  // namespace tlt
