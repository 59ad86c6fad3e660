#include "record.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "json.hpp"

namespace phylodist::cli {

void OutputRecord::add_row(std::vector<std::string> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("output row width does not match the header");
  }
  rows.push_back(std::move(row));
}

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.15g", value);
  return buffer;
}

std::string serialize(const OutputRecord& record, const std::string& format) {
  if (format == "csv") {
    std::string out;
    for (std::size_t c = 0; c < record.columns.size(); ++c) {
      if (c > 0) {
        out += ',';
      }
      out += record.columns[c];
    }
    out += '\n';
    for (const auto& row : record.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c > 0) {
          out += ',';
        }
        out += row[c];
      }
      out += '\n';
    }
    return out;
  }
  if (format == "json") {
    nlohmann::ordered_json array = nlohmann::ordered_json::array();
    for (const auto& row : record.rows) {
      nlohmann::ordered_json object;
      for (std::size_t c = 0; c < row.size(); ++c) {
        object[record.columns[c]] = row[c];
      }
      array.push_back(std::move(object));
    }
    return array.dump(2) + "\n";
  }
  throw std::domain_error("unknown output format: " + format);
}

void emit(const OutputRecord& record, const std::string& format,
          const std::string& output_path) {
  const std::string text = serialize(record, format);
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path);
  if (!out) {
    throw std::domain_error("cannot open output file: " + output_path);
  }
  out << text;
}

}  // namespace phylodist::cli
