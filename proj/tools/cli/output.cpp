#include "output.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace echspec::cli {
namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char ch : text) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

std::string cell_text(const Cell& cell) {
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  return format_double(std::get<double>(cell));
}

nlohmann::ordered_json cell_json(const Cell& cell) {
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  const double v = std::get<double>(cell);
  if (!std::isfinite(v)) return format_double(v);
  return v;
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_report(const Report& report, Format format, const nlohmann::ordered_json& config,
                  std::ostream& out) {
  for (const auto& row : report.rows) {
    if (row.size() != report.columns.size()) throw std::logic_error("report row width mismatch");
  }
  if (format == Format::Json) {
    nlohmann::ordered_json doc;
    doc["config"] = config;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : report.rows) {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (std::size_t i = 0; i < row.size(); ++i) obj[report.columns[i]] = cell_json(row[i]);
      doc["rows"].push_back(std::move(obj));
    }
    doc["summary"] = report.summary;
    doc["warnings"] = report.warnings;
    out << doc.dump(2) << '\n';
    return;
  }

  for (std::size_t i = 0; i < report.columns.size(); ++i) {
    out << (i ? "," : "") << csv_field(report.columns[i]);
  }
  out << '\n';
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(cell_text(row[i]));
    out << '\n';
  }
  for (const auto& [key, value] : report.summary.items()) {
    out << "# " << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
  for (const auto& w : report.warnings) out << "# warning: " << w << '\n';
}

}  // namespace echspec::cli
