#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mineq {

// All emitted numbers carry 10 significant digits; output is deterministic
// byte for byte for a given config, whatever the worker count.
std::string format_double(double x);

// format_double round-tripped back to a double, for embedding in JSON.
double round_to_report_precision(double x);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

// CSV with leading comment lines carrying the library version and the
// resolved config, then a header row and the data rows.
std::string to_csv(const Table& table, std::string_view config_json);

// Canonical JSON report envelope:
// {"config": ..., "mineq_version": "...", "results": ...}, 2-space indent,
// sorted keys. config_json and results_json must parse as JSON.
std::string report_json(std::string_view config_json, std::string_view results_json);

}  // namespace mineq
