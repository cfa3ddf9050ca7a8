#include "mineq/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "mineq/version.hpp"

namespace mineq {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

double round_to_report_precision(double x) {
  return std::strtod(format_double(x).c_str(), nullptr);
}

std::string to_csv(const Table& table, std::string_view config_json) {
  std::string out;
  out += "# mineq ";
  out += kVersion;
  out += '\n';
  out += "# config: ";
  out += config_json;
  out += '\n';
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c != 0) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size()) {
      throw std::invalid_argument("to_csv: row width does not match the header");
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c != 0) out += ',';
      out += row[c];
    }
    out += '\n';
  }
  return out;
}

std::string report_json(std::string_view config_json, std::string_view results_json) {
  nlohmann::json doc;
  doc["mineq_version"] = kVersion;
  doc["config"] = nlohmann::json::parse(config_json);
  doc["results"] = nlohmann::json::parse(results_json);
  return doc.dump(2) + "\n";
}

}  // namespace mineq
