#pragma once

#include <string>
#include <vector>

namespace phylodist::cli {

/// One command's tabular output: column names plus rows of value strings.
/// Exact quantities arrive already rendered ("p/q" or decimal strings) and
/// floats with 15 significant digits, so CSV and JSON emissions carry
/// identical values and parsing them back is lossless.
struct OutputRecord {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row);
};

/// %.15g rendering used for every float column.
std::string format_double(double value);

/// Serializes as CSV (header row first) or a JSON array of objects with
/// the columns in declaration order.
std::string serialize(const OutputRecord& record, const std::string& format);

/// Writes to the given path, or to stdout when the path is empty.
void emit(const OutputRecord& record, const std::string& format,
          const std::string& output_path);

}  // namespace phylodist::cli
