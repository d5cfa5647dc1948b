// tlt - categorize p-values into signal, indistinguishable, and noise
// subsets by two-level thresholding, with FDR baselines, asymptotic
// boundaries, a simulation harness, and an interval-scan pipeline.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tlt/baselines.hpp"
#include "tlt/errors.hpp"
#include "tlt/interval_scan.hpp"
#include "tlt/io.hpp"
#include "tlt/proportion.hpp"
#include "tlt/simulation.hpp"
#include "tlt/theory.hpp"
#include "tlt/thresholds.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitNumeric = 3;
constexpr const char* kSchemaVersion = "1";

using nlohmann::json;

// All output funnels through here so --output works uniformly.
void emit(const std::optional<std::string>& path, const std::string& content) {
  if (!path || *path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(*path);
  if (!out) throw tlt::InputError("cannot open '" + *path + "' for writing");
  out << content;
}

std::string subset_name(const tlt::TltResult& res, std::size_t rank) {
  if (rank < res.d_star) return "signal";
  if (rank < res.d_star_star) return "indistinguishable";
  return "noise";
}

struct AnalyzeArgs {
  std::string input;
  std::string column;
  char delimiter = ',';
  double alpha = 0.0;  // 0 means the tolerance preset applies
  double beta = 0.0;
  std::string tolerance = "half-log";
  double fdr_alpha = 0.05;
  std::vector<double> bounds;
  std::optional<std::string> output;
  std::string format = "csv";
};

double preset_tolerance(const std::string& name, std::size_t n) {
  return name == "log" ? tlt::tolerance_log(n) : tlt::tolerance_half_log(n);
}

int run_analyze(const AnalyzeArgs& args) {
  tlt::PValueInputSpec spec;
  spec.delimiter = args.delimiter;
  if (!args.column.empty()) spec.column = args.column;
  tlt::PValueSample sample(tlt::read_pvalues_file(args.input, spec));
  const std::size_t n = sample.size();

  tlt::TltConfig cfg;
  cfg.alpha_n = args.alpha > 0.0 ? args.alpha : preset_tolerance(args.tolerance, n);
  cfg.beta_n = args.beta > 0.0 ? args.beta : preset_tolerance(args.tolerance, n);
  if (!args.bounds.empty()) {
    cfg.bounds = tlt::PriorBounds{args.bounds[0], args.bounds[1]};
  }
  const tlt::TltResult res = tlt::categorize(sample, cfg);

  // Baselines; the adaptive plug-in keeps the MR estimate even in bounds mode.
  double pi_for_afdr = 0.0;
  std::optional<double> pi_hat;
  if (n >= 8) {
    pi_hat = tlt::estimate_pi_mr(sample).pi_hat;
    pi_for_afdr = *pi_hat;
  }
  const tlt::FdrCutoff fdr = tlt::bh_fdr(sample, args.fdr_alpha);
  const tlt::FdrCutoff afdr = tlt::adaptive_fdr(sample, args.fdr_alpha, pi_for_afdr);

  std::vector<std::size_t> rank_of(n);
  for (std::size_t r = 0; r < n; ++r) rank_of[sample.sort_permutation()[r]] = r;

  if (args.format == "json") {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "analyze";
    doc["n"] = n;
    doc["alpha_n"] = cfg.alpha_n;
    doc["beta_n"] = cfg.beta_n;
    if (cfg.bounds) {
      doc["proportion"] = {{"mode", "bounds"},
                           {"pi_minus", cfg.bounds->pi_minus},
                           {"pi_plus", cfg.bounds->pi_plus}};
    } else {
      doc["proportion"] = {{"mode", "estimate"}, {"pi_hat", res.pi_used}};
    }
    doc["d_star"] = res.d_star;
    doc["d_star_star"] = res.d_star_star;
    doc["k_start"] = res.k_start;
    doc["t_fdr"] = fdr.cutoff_rank;
    doc["t_afdr"] = afdr.cutoff_rank;
    json items = json::array();
    for (std::size_t i = 0; i < n; ++i) {
      items.push_back({{"index", i},
                       {"p_value", sample.values()[i]},
                       {"rank", rank_of[i] + 1},
                       {"subset", subset_name(res, rank_of[i])}});
    }
    doc["assignments"] = std::move(items);
    emit(args.output, doc.dump(2) + "\n");
    return kExitOk;
  }

  std::ostringstream summary;
  summary << "n,mode,pi_hat,pi_minus,pi_plus,alpha_n,beta_n,d_star,d_star_star,"
             "k_start,t_fdr,t_afdr\n";
  summary << n << ',' << (cfg.bounds ? "bounds" : "estimate") << ','
          << (pi_hat ? tlt::format_double(*pi_hat) : "") << ','
          << (cfg.bounds ? tlt::format_double(cfg.bounds->pi_minus) : "") << ','
          << (cfg.bounds ? tlt::format_double(cfg.bounds->pi_plus) : "") << ','
          << tlt::format_double(cfg.alpha_n) << ','
          << tlt::format_double(cfg.beta_n) << ',' << res.d_star << ','
          << res.d_star_star << ',' << res.k_start << ',' << fdr.cutoff_rank
          << ',' << afdr.cutoff_rank << '\n';
  std::cout << summary.str();

  if (args.output) {
    std::ostringstream items;
    items << "index,p_value,rank,subset\n";
    for (std::size_t i = 0; i < n; ++i) {
      items << i << ',' << tlt::format_double(sample.values()[i]) << ','
            << rank_of[i] + 1 << ',' << subset_name(res, rank_of[i]) << '\n';
    }
    emit(args.output, items.str());
  }
  return kExitOk;
}

struct SimulateArgs {
  std::string preset;
  std::size_t n = 0;
  double pi = 0.0;
  double mu = 0.0;
  double theta = 0.0;
  double hetero_fraction = 0.0;
  double ar = -1.0;
  std::size_t reps = 100;
  std::uint64_t seed = 0;
  double alpha = 0.0;
  double beta = 0.0;
  double fdr_alpha = 0.05;
  std::string mad = "mean";
  std::optional<std::string> output;
  std::optional<std::string> raw;
  std::string format = "csv";
};

int run_simulate(const SimulateArgs& args) {
  std::vector<tlt::Scenario> scenarios;
  tlt::ExperimentOptions options;
  if (!args.preset.empty()) {
    const std::vector<std::string> names = tlt::preset_names();
    if (std::find(names.begin(), names.end(), args.preset) == names.end()) {
      std::string known;
      for (const std::string& name : names) {
        known += known.empty() ? name : ", " + name;
      }
      throw CLI::ValidationError("--preset", "unknown preset '" + args.preset +
                                                 "'; known presets: " + known);
    }
    scenarios = tlt::preset_scenarios(args.preset, args.seed);
    options = tlt::preset_options(args.preset);
  } else {
    if (args.n == 0 || args.pi <= 0.0) {
      throw CLI::ValidationError("simulate",
                                 "need --preset or both --n and --pi");
    }
    tlt::Scenario sc;
    sc.label = "scenario";
    sc.n = args.n;
    sc.pi = args.pi;
    sc.mu = args.mu;
    if (args.theta > 0.0) {
      sc.noise = tlt::HeteroGammaNoise{args.theta, args.hetero_fraction};
    }
    if (args.ar >= 0.0) sc.dependence = tlt::Ar1{args.ar};
    sc.seed = args.seed;
    scenarios.push_back(sc);
  }
  if (args.alpha > 0.0) options.alpha_n = args.alpha;
  if (args.beta > 0.0) options.beta_n = args.beta;
  options.fdr_alpha = args.fdr_alpha;
  options.mad = args.mad == "median" ? tlt::MadKind::MedianAbsoluteDeviation
                                     : tlt::MadKind::MeanAbsoluteDeviation;

  const tlt::SummaryTable table = tlt::run_experiment(scenarios, args.reps, options);

  if (args.raw) {
    std::ostringstream raw;
    tlt::write_raw_records_csv(raw, table);
    emit(args.raw, raw.str());
  }

  if (args.format == "json") {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "simulate";
    doc["reps"] = table.reps;
    json rows = json::array();
    for (const tlt::SummaryRow& row : table.rows) {
      json procs;
      const std::pair<const char*, const tlt::ProcedureSummary*> items[] = {
          {"d_star", &row.d_star},
          {"t_fdr", &row.t_fdr},
          {"t_afdr", &row.t_afdr},
          {"d_star_star", &row.d_star_star}};
      for (const auto& [name, s] : items) {
        procs[name] = {{"cutoff_median", s->cutoff_median},
                       {"cutoff_mad", s->cutoff_mad},
                       {"fp_median", s->fp_median},
                       {"fp_mad", s->fp_mad},
                       {"fn_median", s->fn_median},
                       {"fn_mad", s->fn_mad}};
      }
      rows.push_back({{"key", row.key},
                      {"n", row.scenario.n},
                      {"procedures", std::move(procs)}});
    }
    doc["rows"] = std::move(rows);
    emit(args.output, doc.dump(2) + "\n");
  } else {
    std::ostringstream csv;
    tlt::write_summary_table_csv(csv, table);
    emit(args.output, csv.str());
  }
  return kExitOk;
}

struct ScanArgs {
  std::string input;
  char delimiter = ',';
  std::size_t max_length = 20;
  double pi_minus = 0.0;
  double pi_plus = 0.005;
  double alpha = 0.0;
  double beta = 0.0;
  std::string tolerance = "half-log";
  bool two_sided = false;
  bool no_normalize = false;
  std::optional<std::string> output;
  std::string format = "csv";
};

int run_scan(const ScanArgs& args) {
  tlt::Track track = tlt::read_track_file(args.input, args.delimiter);
  if (!args.no_normalize) track = tlt::normalize(track);
  const std::vector<tlt::IntervalStat> stats = tlt::scan_intervals(
      track, args.max_length,
      args.two_sided ? tlt::ScanTail::TwoSided : tlt::ScanTail::Lower);
  const std::vector<tlt::IntervalStat> kept = tlt::prune_overlaps(stats);
  const std::size_t n_kept = kept.size();
  const double alpha =
      args.alpha > 0.0 ? args.alpha : preset_tolerance(args.tolerance, n_kept);
  const double beta =
      args.beta > 0.0 ? args.beta : preset_tolerance(args.tolerance, n_kept);
  const tlt::PriorBounds bounds{args.pi_minus, args.pi_plus};
  const tlt::TltResult res = tlt::categorize_intervals(kept, bounds, alpha, beta);

  // Ranks among the kept intervals, ascending p.
  std::vector<std::size_t> rank_of(n_kept);
  {
    tlt::PValueSample kept_sample = [&] {
      std::vector<double> p;
      p.reserve(n_kept);
      for (const tlt::IntervalStat& iv : kept) p.push_back(iv.p_value);
      return tlt::PValueSample(std::move(p));
    }();
    for (std::size_t r = 0; r < n_kept; ++r) {
      rank_of[kept_sample.sort_permutation()[r]] = r;
    }
  }

  if (args.format == "json") {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "scan";
    doc["summary"] = {{"n_probes", track.values.size()},
                      {"n_intervals", stats.size()},
                      {"n_kept", n_kept},
                      {"pi_minus", bounds.pi_minus},
                      {"pi_plus", bounds.pi_plus},
                      {"alpha_n", alpha},
                      {"beta_n", beta},
                      {"d_star", res.d_star},
                      {"d_star_star", res.d_star_star}};
    json items = json::array();
    for (std::size_t i = 0; i < n_kept; ++i) {
      items.push_back({{"start", track.positions[kept[i].start]},
                       {"end", track.positions[kept[i].end]},
                       {"probes", kept[i].end - kept[i].start + 1},
                       {"statistic", kept[i].statistic},
                       {"p_value", kept[i].p_value},
                       {"rank", rank_of[i] + 1},
                       {"subset", subset_name(res, rank_of[i])}});
    }
    doc["intervals"] = std::move(items);
    emit(args.output, doc.dump(2) + "\n");
    return kExitOk;
  }

  std::cout << "n_probes,n_intervals,n_kept,pi_minus,pi_plus,alpha_n,beta_n,"
               "d_star,d_star_star\n"
            << track.values.size() << ',' << stats.size() << ',' << n_kept
            << ',' << tlt::format_double(bounds.pi_minus) << ','
            << tlt::format_double(bounds.pi_plus) << ','
            << tlt::format_double(alpha) << ',' << tlt::format_double(beta)
            << ',' << res.d_star << ',' << res.d_star_star << '\n';
  if (args.output) {
    std::ostringstream items;
    items << "start,end,probes,statistic,p_value,rank,subset\n";
    for (std::size_t i = 0; i < n_kept; ++i) {
      items << track.positions[kept[i].start] << ','
            << track.positions[kept[i].end] << ','
            << kept[i].end - kept[i].start + 1 << ','
            << tlt::format_double(kept[i].statistic) << ','
            << tlt::format_double(kept[i].p_value) << ',' << rank_of[i] + 1
            << ',' << subset_name(res, rank_of[i]) << '\n';
    }
    emit(args.output, items.str());
  }
  return kExitOk;
}

struct TheoryArgs {
  std::size_t s0 = 0;
  std::size_t s1 = 0;
  double eps = 0.05;
  double beta = -1.0;
  std::size_t n = 0;
  double r = 0.0;
  std::optional<std::string> output;
  std::string format = "csv";
};

int run_theory(const TheoryArgs& args) {
  const bool have_counts = args.s0 > 0 || args.s1 > 0;
  const bool have_beta = args.beta >= 0.0;
  if (have_counts == have_beta) {
    throw CLI::ValidationError("theory",
                               "give either --s0/--s1 or --beta, not both");
  }
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = "theory";
  std::ostringstream csv;
  if (have_counts) {
    const tlt::ExistenceBoundaries b =
        tlt::existence_boundaries(args.s0, args.s1, args.eps);
    doc["existence"] = {{"s0", args.s0},
                        {"s1", args.s1},
                        {"eps", args.eps},
                        {"mu_signal_lower", b.mu_signal_lower},
                        {"mu_indist_upper", b.mu_indist_upper},
                        {"noise_subset_exists", b.noise_condition_holds}};
    // implied sparsity exponent pi = s1/n = n^-beta and its recovery region
    const std::size_t n = args.s0 + args.s1;
    const double beta_implied =
        std::log(double(n) / double(args.s1)) / std::log(double(n));
    std::string r_lo_str, r_hi_str, beta_str;
    if (beta_implied > 0.0 && beta_implied < 1.0) {
      const auto [r_lo, r_hi] = tlt::recovery_region(beta_implied);
      doc["recovery"] = {{"beta", beta_implied},
                         {"r_signal_exists", r_lo},
                         {"r_indist_vanishes", r_hi}};
      beta_str = tlt::format_double(beta_implied);
      r_lo_str = tlt::format_double(r_lo);
      r_hi_str = tlt::format_double(r_hi);
    }
    csv << "s0,s1,eps,mu_signal_lower,mu_indist_upper,noise_subset_exists,"
           "beta,r_signal_exists,r_indist_vanishes\n"
        << args.s0 << ',' << args.s1 << ',' << tlt::format_double(args.eps)
        << ',' << tlt::format_double(b.mu_signal_lower) << ','
        << tlt::format_double(b.mu_indist_upper) << ','
        << (b.noise_condition_holds ? "true" : "false") << ',' << beta_str
        << ',' << r_lo_str << ',' << r_hi_str << '\n';
  } else {
    const auto [r_lo, r_hi] = tlt::recovery_region(args.beta);
    doc["recovery"] = {{"beta", args.beta},
                       {"r_signal_exists", r_lo},
                       {"r_indist_vanishes", r_hi}};
    csv << "beta,r_signal_exists,r_indist_vanishes";
    if (args.n >= 2 && args.r > 0.0) {
      const tlt::MixtureCalibration cal{args.n, args.beta, args.r};
      doc["calibration"] = {{"n", args.n},
                            {"r", args.r},
                            {"pi", cal.pi()},
                            {"mu", cal.mu()}};
      csv << ",n,r,pi,mu\n"
          << tlt::format_double(args.beta) << ',' << tlt::format_double(r_lo)
          << ',' << tlt::format_double(r_hi) << ',' << args.n << ','
          << tlt::format_double(args.r) << ',' << tlt::format_double(cal.pi())
          << ',' << tlt::format_double(cal.mu()) << '\n';
    } else {
      csv << '\n'
          << tlt::format_double(args.beta) << ',' << tlt::format_double(r_lo)
          << ',' << tlt::format_double(r_hi) << '\n';
    }
  }
  emit(args.output, args.format == "json" ? doc.dump(2) + "\n" : csv.str());
  return kExitOk;
}

char parse_delimiter(const std::string& s) {
  if (s == "\\t" || s == "tab") return '\t';
  if (s.size() == 1) return s[0];
  throw CLI::ValidationError("delimiter", "must be a single character or 'tab'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-level thresholding: signal / indistinguishable / noise "
               "categorization of p-values"};
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  std::string analyze_delim = ",";
  std::string analyze_output;
  CLI::App* analyze = app.add_subcommand("analyze", "Categorize a file of p-values");
  analyze->add_option("--input,-i", analyze_args.input, "p-value file")
      ->required()
      ->check(CLI::ExistingFile);
  analyze->add_option("--column", analyze_args.column,
                      "named column of a delimited file (default: one value per line)");
  analyze->add_option("--delimiter", analyze_delim, "field delimiter (default ,)");
  analyze->add_option("--alpha", analyze_args.alpha,
                      "false-positive tolerance (default 1/(2 log n))");
  analyze->add_option("--beta", analyze_args.beta,
                      "false-negative tolerance (default 1/(2 log n))");
  analyze->add_option("--tolerance", analyze_args.tolerance,
                      "default tolerance rule: half-log = 1/(2 log n), log = 1/log n")
      ->check(CLI::IsMember({"half-log", "log"}));
  analyze->add_option("--fdr-alpha", analyze_args.fdr_alpha,
                      "level for the FDR baselines (default 0.05)");
  analyze->add_option("--bounds", analyze_args.bounds,
                      "prior proportion bounds: PI_MINUS PI_PLUS")
      ->expected(2);
  analyze->add_option("--output,-o", analyze_output,
                      "write per-item assignments here (csv) or the whole "
                      "report (json)");
  analyze->add_option("--format", analyze_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  SimulateArgs sim_args;
  std::string sim_output, sim_raw;
  CLI::App* simulate = app.add_subcommand("simulate", "Run seeded replication studies");
  simulate->add_option("--preset", sim_args.preset,
                       "table1, table2, table3, table3alt, or table5");
  simulate->add_option("--n", sim_args.n, "observations per replication");
  simulate->add_option("--pi", sim_args.pi, "signal proportion");
  simulate->add_option("--mu", sim_args.mu, "signal mean shift");
  simulate->add_option("--theta", sim_args.theta,
                       "heterogeneous-noise Gamma scale (enables the model)");
  simulate->add_option("--hetero-fraction", sim_args.hetero_fraction,
                       "share of observations with heterogeneous noise");
  simulate->add_option("--ar", sim_args.ar, "AR(1) autocorrelation in [0,1)");
  simulate->add_option("--reps", sim_args.reps, "replications (default 100)");
  simulate->add_option("--seed", sim_args.seed, "base seed; replication r uses seed+r")
      ->required();
  simulate->add_option("--alpha", sim_args.alpha, "override alpha_n");
  simulate->add_option("--beta", sim_args.beta, "override beta_n");
  simulate->add_option("--fdr-alpha", sim_args.fdr_alpha,
                       "level for the FDR baselines (default 0.05)");
  simulate->add_option("--mad", sim_args.mad,
                       "spread statistic: mean or median absolute deviation")
      ->check(CLI::IsMember({"mean", "median"}));
  simulate->add_option("--raw", sim_raw, "write per-replication records here (csv)");
  simulate->add_option("--output,-o", sim_output, "summary destination");
  simulate->add_option("--format", sim_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  ScanArgs scan_args;
  std::string scan_delim = ",";
  std::string scan_output;
  CLI::App* scan = app.add_subcommand("scan", "Interval scan of a signal track");
  scan->add_option("--input,-i", scan_args.input, "track file: position,value rows")
      ->required()
      ->check(CLI::ExistingFile);
  scan->add_option("--delimiter", scan_delim, "field delimiter (default ,)");
  scan->add_option("--max-length,-L", scan_args.max_length,
                   "longest interval in probes (default 20)");
  scan->add_option("--pi-minus", scan_args.pi_minus,
                   "proportion lower bound (default 0)");
  scan->add_option("--pi-plus", scan_args.pi_plus,
                   "proportion upper bound (default 0.005)");
  scan->add_option("--alpha", scan_args.alpha,
                   "override alpha_n (default 1/(2 log n_kept))");
  scan->add_option("--beta", scan_args.beta, "override beta_n");
  scan->add_option("--tolerance", scan_args.tolerance,
                   "default tolerance rule: half-log = 1/(2 log n), log = 1/log n")
      ->check(CLI::IsMember({"half-log", "log"}));
  scan->add_flag("--two-sided", scan_args.two_sided,
                 "scan both tails (duplications as well as deletions)");
  scan->add_flag("--no-normalize", scan_args.no_normalize,
                 "input is already standardized");
  scan->add_option("--output,-o", scan_output, "write kept intervals here");
  scan->add_option("--format", scan_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  TheoryArgs theory_args;
  std::string theory_output;
  CLI::App* theory = app.add_subcommand(
      "theory", "Existence boundaries and recovery region");
  theory->add_option("--s0", theory_args.s0, "noise count");
  theory->add_option("--s1", theory_args.s1, "signal count");
  theory->add_option("--eps", theory_args.eps, "boundary slack (default 0.05)");
  theory->add_option("--beta", theory_args.beta, "sparsity exponent in (0,1)");
  theory->add_option("--n", theory_args.n, "dimension for the calibration");
  theory->add_option("--r", theory_args.r, "strength parameter for the calibration");
  theory->add_option("--output,-o", theory_output, "destination");
  theory->add_option("--format", theory_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) {
      analyze_args.delimiter = parse_delimiter(analyze_delim);
      if (!analyze_output.empty()) analyze_args.output = analyze_output;
      return run_analyze(analyze_args);
    }
    if (*simulate) {
      if (!sim_output.empty()) sim_args.output = sim_output;
      if (!sim_raw.empty()) sim_args.raw = sim_raw;
      return run_simulate(sim_args);
    }
    if (*scan) {
      scan_args.delimiter = parse_delimiter(scan_delim);
      if (!scan_output.empty()) scan_args.output = scan_output;
      return run_scan(scan_args);
    }
    if (*theory) {
      if (!theory_output.empty()) theory_args.output = theory_output;
      return run_theory(theory_args);
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const tlt::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const tlt::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitUsage;
}
