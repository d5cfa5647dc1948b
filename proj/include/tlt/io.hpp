#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tlt/interval_scan.hpp"
#include "tlt/simulation.hpp"

namespace tlt {

struct PValueInputSpec {
  // Engaged: delimited file with a header row holding this column name.
  // Absent: one value per line.
  std::optional<std::string> column;
  char delimiter = ',';
};

// Errors carry the source name, the 1-based line number, and the offending
// token.
std::vector<double> read_pvalues(std::istream& in, const PValueInputSpec& spec,
                                 const std::string& source_name);
std::vector<double> read_pvalues_file(const std::string& path,
                                      const PValueInputSpec& spec);

// Delimited (position, value) rows; a non-numeric first row is treated as a
// header.
Track read_track(std::istream& in, char delimiter,
                 const std::string& source_name);
Track read_track_file(const std::string& path, char delimiter);

// RFC-4180-style quoting: fields containing the delimiter, quotes, or
// newlines are quoted, with embedded quotes doubled.
std::string csv_escape(const std::string& field, char delimiter = ',');

// Shortest round-trippable decimal representation.
std::string format_double(double v);

void write_summary_table_csv(std::ostream& out, const SummaryTable& table);
void write_raw_records_csv(std::ostream& out, const SummaryTable& table);

}  // namespace tlt
