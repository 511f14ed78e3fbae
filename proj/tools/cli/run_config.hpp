#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "echspec/envelope.hpp"
#include "echspec/rational.hpp"
#include "echspec/zeta.hpp"
#include "output.hpp"

namespace echspec::cli {

enum class Subcommand { Capacities, Weyl, Dk, Zeta, Residues, Envelope };

const char* to_string(Subcommand c);

struct IndexRange {
  BigInt lo;
  BigInt hi;
};

struct RunConfig {
  Subcommand command = Subcommand::Capacities;
  std::string a = "1";
  std::string b = "1";
  std::optional<IndexRange> range;          // capacities, dk
  std::vector<Rational> radii;              // weyl
  std::vector<ComplexVal> points;           // zeta
  std::optional<ZetaConvention> convention; // zeta, residues; all when unset
  Format format = Format::Csv;
  std::string cache_path;                   // capacities, dk; empty disables the cache

  ZetaOptions zeta;
  double laurent_radius = 0.3;
  int laurent_points = 64;
  int windows = 4;                          // dk exponent fit

  EnvelopeConstants constants;
  double j_min = 1e4;
  double j_max = 1e10;
  int j_steps = 7;
  bool unchecked = false;                   // envelope without the admissibility guard

  // Parsed ellipsoid; throws std::invalid_argument on bad a, b.
  Ellipsoid ellipsoid() const;
  nlohmann::ordered_json to_json() const;
};

// Inclusive "lo..hi" or a single index "k".
IndexRange parse_range(std::string_view text);
// "re,im" or "re".
ComplexVal parse_complex(std::string_view text);
// Comma-separated rationals.
std::vector<Rational> parse_rational_list(std::string_view text);

// Thrown for malformed command lines; carries the text to print and whether
// it is a help request (exit code 0) or an error.
struct UsageError {
  std::string message;
  int exit_code;
};

// Parses argv into a RunConfig. Throws UsageError.
RunConfig parse_args(int argc, const char* const* argv);

}  // namespace echspec::cli
