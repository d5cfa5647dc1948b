#include "tlt/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include "tlt/errors.hpp"

namespace tlt {

namespace {

std::string strip(const std::string& s) {
  const std::size_t first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const std::size_t last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& line, char delimiter) {
  std::vector<std::string> fields;
  std::string current;
  for (const char c : line) {
    if (c == delimiter) {
      fields.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  fields.push_back(current);
  return fields;
}

bool parse_double(const std::string& token, double* out) {
  const std::string t = strip(token);
  if (t.empty()) return false;
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size() || errno == ERANGE) return false;
  *out = v;
  return true;
}

bool parse_int64(const std::string& token, std::int64_t* out) {
  const std::string t = strip(token);
  if (t.empty()) return false;
  errno = 0;
  char* end = nullptr;
  const long long v = std::strtoll(t.c_str(), &end, 10);
  if (end != t.c_str() + t.size() || errno == ERANGE) return false;
  *out = v;
  return true;
}

[[noreturn]] void fail_at(const std::string& source, std::size_t line,
                          const std::string& what) {
  throw InputError(source + " line " + std::to_string(line) + ": " + what);
}

double parse_pvalue(const std::string& token, const std::string& source,
                    std::size_t line) {
  double v = 0.0;
  if (!parse_double(token, &v)) {
    fail_at(source, line, "cannot parse '" + strip(token) + "' as a number");
  }
  if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
    fail_at(source, line,
            "p-value " + format_double(v) + " is outside [0, 1]");
  }
  return v;
}

std::ifstream open_or_fail(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "' for reading");
  return in;
}

}  // namespace

std::vector<double> read_pvalues(std::istream& in, const PValueInputSpec& spec,
                                 const std::string& source_name) {
  std::vector<double> out;
  std::string line;
  std::size_t line_no = 0;

  if (!spec.column) {
    while (std::getline(in, line)) {
      ++line_no;
      const std::string token = strip(line);
      if (token.empty()) continue;
      out.push_back(parse_pvalue(token, source_name, line_no));
    }
  } else {
    if (!std::getline(in, line)) {
      throw InputError(source_name + ": empty file, expected a header row");
    }
    ++line_no;
    const std::vector<std::string> header = split(line, spec.delimiter);
    std::size_t col = header.size();
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (strip(header[i]) == *spec.column) {
        col = i;
        break;
      }
    }
    if (col == header.size()) {
      throw InputError(source_name + ": no column named '" + *spec.column +
                       "' in the header");
    }
    while (std::getline(in, line)) {
      ++line_no;
      if (strip(line).empty()) continue;
      const std::vector<std::string> fields = split(line, spec.delimiter);
      if (col >= fields.size()) {
        fail_at(source_name, line_no,
                "row has " + std::to_string(fields.size()) +
                    " fields, column '" + *spec.column + "' needs " +
                    std::to_string(col + 1));
      }
      out.push_back(parse_pvalue(fields[col], source_name, line_no));
    }
  }
  if (out.empty()) {
    throw InputError(source_name + ": no p-values found");
  }
  return out;
}

std::vector<double> read_pvalues_file(const std::string& path,
                                      const PValueInputSpec& spec) {
  std::ifstream in = open_or_fail(path);
  return read_pvalues(in, spec, path);
}

Track read_track(std::istream& in, char delimiter,
                 const std::string& source_name) {
  Track track;
  std::string line;
  std::size_t line_no = 0;
  bool first_data_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (strip(line).empty()) continue;
    const std::vector<std::string> fields = split(line, delimiter);
    if (fields.size() < 2) {
      fail_at(source_name, line_no, "expected (position, value) columns");
    }
    std::int64_t pos = 0;
    double val = 0.0;
    const bool ok = parse_int64(fields[0], &pos) && parse_double(fields[1], &val);
    if (!ok) {
      if (!first_data_seen) continue;  // header row
      fail_at(source_name, line_no, "cannot parse '" + strip(line) + "'");
    }
    if (!std::isfinite(val)) {
      fail_at(source_name, line_no, "non-finite track value");
    }
    if (!track.positions.empty() && pos <= track.positions.back()) {
      fail_at(source_name, line_no,
              "positions must be strictly increasing (got " +
                  std::to_string(pos) + " after " +
                  std::to_string(track.positions.back()) + ")");
    }
    first_data_seen = true;
    track.positions.push_back(pos);
    track.values.push_back(val);
  }
  if (track.values.size() < 2) {
    throw InputError(source_name + ": need at least 2 track rows");
  }
  return track;
}

Track read_track_file(const std::string& path, char delimiter) {
  std::ifstream in = open_or_fail(path);
  return read_track(in, delimiter, path);
}

std::string csv_escape(const std::string& field, char delimiter) {
  const bool needs_quotes =
      field.find_first_of(std::string{delimiter} + "\"\r\n") != std::string::npos;
  if (!needs_quotes) return field;
  std::string quoted = "\"";
  for (const char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string format_double(double v) {
  if (v == static_cast<double>(static_cast<long long>(v)) &&
      std::fabs(v) < 1e15) {
    return std::to_string(static_cast<long long>(v));
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  double parsed = 0.0;
  if (parse_double(buf, &parsed) && parsed == v) {
    for (int prec = 15; prec <= 16; ++prec) {
      char shorter[40];
      std::snprintf(shorter, sizeof(shorter), "%.*g", prec, v);
      if (parse_double(shorter, &parsed) && parsed == v) {
        return shorter;
      }
    }
  }
  return buf;
}

void write_summary_table_csv(std::ostream& out, const SummaryTable& table) {
  out << "key,n,reps";
  for (const char* proc : {"d_star", "t_fdr", "t_afdr", "d_star_star"}) {
    for (const char* stat : {"", "_mad"}) {
      out << ',' << proc << "_cutoff" << stat;
      out << ',' << proc << "_fp" << stat;
      out << ',' << proc << "_fn" << stat;
    }
  }
  out << '\n';
  for (const SummaryRow& row : table.rows) {
    out << csv_escape(row.key) << ',' << row.scenario.n << ',' << table.reps;
    // Interleave medians and MADs per procedure to match the header layout.
    for (const ProcedureSummary* s :
         {&row.d_star, &row.t_fdr, &row.t_afdr, &row.d_star_star}) {
      out << ',' << format_double(s->cutoff_median) << ','
          << format_double(s->fp_median) << ',' << format_double(s->fn_median)
          << ',' << format_double(s->cutoff_mad) << ','
          << format_double(s->fp_mad) << ',' << format_double(s->fn_mad);
    }
    out << '\n';
  }
}

void write_raw_records_csv(std::ostream& out, const SummaryTable& table) {
  out << "key,rep,seed,pi_hat";
  for (const char* proc : {"d_star", "t_fdr", "t_afdr", "d_star_star"}) {
    out << ',' << proc << "_cutoff," << proc << "_fp," << proc << "_fn";
  }
  out << '\n';
  for (const SummaryRow& row : table.rows) {
    for (std::size_t rep = 0; rep < row.replications.size(); ++rep) {
      const RepRecord& rec = row.replications[rep];
      out << csv_escape(row.key) << ',' << rep << ',' << rec.seed << ','
          << format_double(rec.pi_hat);
      for (const RunMetrics* m :
           {&rec.d_star, &rec.t_fdr, &rec.t_afdr, &rec.d_star_star}) {
        out << ',' << m->cutoff << ',' << m->fp << ',' << m->fn;
      }
      out << '\n';
    }
  }
}

}  // namespace tlt
