#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace echspec::cli {

enum class Format { Csv, Json };

// A table cell. Exact quantities (integers of any size, numerators,
// denominators) and labels are carried as text; floats as doubles.
using Cell = std::variant<std::string, double>;

struct Report {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();
  std::vector<std::string> warnings;
};

// 17 significant digits; "nan", "inf", "-inf" for non-finite values.
std::string format_double(double v);

// CSV: the header and data rows, then summary entries and warnings as
// "# key=value" and "# warning: ..." comment lines.
// JSON: {"config", "rows", "summary", "warnings"}; exact cells stay strings.
void write_report(const Report& report, Format format, const nlohmann::ordered_json& config,
                  std::ostream& out);

}  // namespace echspec::cli
