#include "run_config.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

namespace echspec::cli {
namespace {

double parse_double(std::string_view text, const char* what) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw std::invalid_argument(std::string("cannot parse ") + what + " '" + std::string(text) + "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

const char* to_string(Subcommand c) {
  switch (c) {
    case Subcommand::Capacities:
      return "capacities";
    case Subcommand::Weyl:
      return "weyl";
    case Subcommand::Dk:
      return "dk";
    case Subcommand::Zeta:
      return "zeta";
    case Subcommand::Residues:
      return "residues";
    case Subcommand::Envelope:
      return "envelope";
  }
  return "unknown";
}

Ellipsoid RunConfig::ellipsoid() const { return Ellipsoid(Rational::parse(a), Rational::parse(b)); }

nlohmann::ordered_json RunConfig::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = to_string(command);
  switch (command) {
    case Subcommand::Capacities:
    case Subcommand::Dk:
      j["a"] = Rational::parse(a).to_string();
      j["b"] = Rational::parse(b).to_string();
      if (range) j["range"] = range->lo.get_str() + ".." + range->hi.get_str();
      if (command == Subcommand::Dk) j["windows"] = windows;
      break;
    case Subcommand::Weyl: {
      j["a"] = Rational::parse(a).to_string();
      j["b"] = Rational::parse(b).to_string();
      auto list = nlohmann::ordered_json::array();
      for (const auto& r : radii) list.push_back(r.to_string());
      j["R"] = list;
      break;
    }
    case Subcommand::Zeta:
    case Subcommand::Residues:
      j["a"] = Rational::parse(a).to_string();
      j["b"] = Rational::parse(b).to_string();
      j["convention"] = convention ? echspec::to_string(*convention) : "all";
      j["tol"] = zeta.tol;
      j["s_max"] = zeta.s_max;
      j["em_shift"] = zeta.em_shift;
      if (command == Subcommand::Residues) {
        j["radius"] = laurent_radius;
        j["n_points"] = laurent_points;
      }
      break;
    case Subcommand::Envelope:
      j["q"] = constants.q;
      j["c0"] = constants.c0;
      j["c1"] = constants.c1;
      j["c2"] = constants.c2;
      j["c3"] = constants.c3();
      j["vol"] = constants.vol;
      j["j_min"] = j_min;
      j["j_max"] = j_max;
      j["j_steps"] = j_steps;
      j["unchecked"] = unchecked;
      break;
  }
  return j;
}

IndexRange parse_range(std::string_view text) {
  text = trim(text);
  const auto dots = text.find("..");
  IndexRange r;
  if (dots == std::string_view::npos) {
    r.lo = r.hi = parse_bigint(text);
  } else {
    r = {parse_bigint(trim(text.substr(0, dots))), parse_bigint(trim(text.substr(dots + 2)))};
  }
  if (sgn(r.lo) < 0) throw std::invalid_argument("range start must be >= 0");
  if (r.lo > r.hi) throw std::invalid_argument("range '" + std::string(text) + "' is empty");
  return r;
}

ComplexVal parse_complex(std::string_view text) {
  text = trim(text);
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return {parse_double(text, "s"), 0.0};
  return {parse_double(trim(text.substr(0, comma)), "Re(s)"),
          parse_double(trim(text.substr(comma + 1)), "Im(s)")};
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    out.push_back(Rational::parse(trim(text.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

RunConfig parse_args(int argc, const char* const* argv) {
  RunConfig cfg;
  CLI::App app{"Exact ECH spectra of ellipsoids, their asymptotics, zeta functions and envelopes",
               "echspec"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "csv";
  app.add_option("-a", cfg.a, "First ellipsoid parameter, \"p\" or \"p/q\"");
  app.add_option("-b", cfg.b, "Second ellipsoid parameter, \"p\" or \"p/q\"");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--tol", cfg.zeta.tol, "Target accuracy for zeta evaluation and Laurent quadrature")
      ->check(CLI::PositiveNumber);

  std::string range;
  std::string cache;
  auto* caps = app.add_subcommand("capacities", "Rows (k, c_num, c_den, c_float) of N(a,b)");
  caps->add_option("-k,--range", range, "Inclusive index range \"lo..hi\"")->required();
  caps->add_option("--cache", cache, "Spectrum cache file");

  std::vector<std::string> radii;
  auto* weyl = app.add_subcommand("weyl", "Weyl counts N(R) and the quadratic fit");
  weyl->add_option("-R", radii, "Radii, comma separated; repeatable")->required();

  auto* dk = app.add_subcommand("dk", "Defect sequence d_j with window statistics");
  dk->add_option("-k,--range", range, "Inclusive index range \"lo..hi\"")->required();
  dk->add_option("--cache", cache, "Spectrum cache file");
  dk->add_option("--windows", cfg.windows, "Geometric windows used by the exponent fit")
      ->check(CLI::Range(2, 64));

  std::string convention;
  std::vector<std::string> points;
  auto add_zeta_options = [&](CLI::App* sub) {
    sub->add_option("--convention", convention, "Summation convention (default: all)")
        ->check(CLI::IsMember({"interior", "full", "distinct"}));
    sub->add_option("--s-max", cfg.zeta.s_max, "Continuation depth: Re(s) > -s_max")
        ->check(CLI::Range(1.0, 12.0));
    sub->add_option("--em-shift", cfg.zeta.em_shift, "Euler-Maclaurin shift")
        ->check(CLI::Range(4.0, 64.0));
  };
  auto* zeta = app.add_subcommand("zeta", "ECH zeta values");
  zeta->add_option("-s", points, "Points \"re,im\"; repeatable")->required();
  add_zeta_options(zeta);

  auto* residues = app.add_subcommand("residues", "Laurent data at s = 1, 2 and the value at 0");
  add_zeta_options(residues);
  residues->add_option("--radius", cfg.laurent_radius, "Contour radius")->check(CLI::Range(1e-3, 0.4));
  residues->add_option("--n-points", cfg.laurent_points, "Quadrature nodes")->check(CLI::Range(32, 1 << 16));

  auto* env = app.add_subcommand("envelope", "Capacity envelope over a log-spaced j sweep");
  env->add_option("--q", cfg.constants.q, "Grading offset q");
  env->add_option("--c0", cfg.constants.c0, "Constant c0")->check(CLI::NonNegativeNumber);
  env->add_option("--c1", cfg.constants.c1, "Constant c1")->check(CLI::PositiveNumber);
  env->add_option("--c2", cfg.constants.c2, "Constant c2")->check(CLI::NonNegativeNumber);
  env->add_option("--vol", cfg.constants.vol, "Contact volume")->check(CLI::PositiveNumber);
  env->add_option("--j-min", cfg.j_min, "Smallest j")->check(CLI::PositiveNumber);
  env->add_option("--j-max", cfg.j_max, "Largest j")->check(CLI::PositiveNumber);
  env->add_option("--steps", cfg.j_steps, "Number of log-spaced j values")->check(CLI::Range(1, 10000));
  env->add_flag("--unchecked", cfg.unchecked, "Skip the j^(4/5) >= r2(j) admissibility guard");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    // CLI11 uses its own nonzero codes; every parse failure is an input error here.
    const int code = app.exit(e, msg, msg) == 0 ? 0 : 2;
    throw UsageError{msg.str(), code};
  }

  try {
    cfg.format = format == "json" ? Format::Json : Format::Csv;
    if (*caps) cfg.command = Subcommand::Capacities;
    if (*weyl) cfg.command = Subcommand::Weyl;
    if (*dk) cfg.command = Subcommand::Dk;
    if (*zeta) cfg.command = Subcommand::Zeta;
    if (*residues) cfg.command = Subcommand::Residues;
    if (*env) cfg.command = Subcommand::Envelope;

    (void)cfg.ellipsoid();
    if (!range.empty()) cfg.range = parse_range(range);
    cfg.cache_path = cache;
    for (const auto& r : radii) {
      for (auto& v : parse_rational_list(r)) cfg.radii.push_back(std::move(v));
    }
    for (const auto& p : points) cfg.points.push_back(parse_complex(p));
    if (!convention.empty()) cfg.convention = parse_convention(convention);
    if (cfg.j_min > cfg.j_max) throw std::invalid_argument("--j-min exceeds --j-max");
    cfg.constants.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError{std::string("echspec: ") + e.what() + "\n", 2};
  }
  return cfg;
}

}  // namespace echspec::cli
