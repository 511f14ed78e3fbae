#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <string>
#include <vector>

#include "echspec/asymptotics.hpp"
#include "echspec/envelope.hpp"
#include "echspec/errors.hpp"
#include "echspec/laurent.hpp"
#include "echspec/spectrum.hpp"
#include "echspec/zeta.hpp"
#include "spectrum_cache.hpp"

namespace echspec::cli {
namespace {

constexpr double kPi = std::numbers::pi;

Cell exact(const BigInt& v) { return v.get_str(); }
Cell num(double v) { return v; }

std::vector<ZetaConvention> conventions(const RunConfig& cfg) {
  if (cfg.convention) return {*cfg.convention};
  return {ZetaConvention::Interior, ZetaConvention::Full, ZetaConvention::Distinct};
}

int emit(const RunConfig& cfg, const Report& report, std::ostream& out, int code) {
  write_report(report, cfg.format, cfg.to_json(), out);
  return code;
}

IndexRange require_range(const RunConfig& cfg) {
  if (!cfg.range) throw std::invalid_argument("an index range (-k lo..hi) is required");
  return *cfg.range;
}

}  // namespace

int cmd_capacities(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto e = cfg.ellipsoid();
  const auto r = require_range(cfg);
  Report report;
  report.columns = {"k", "c_num", "c_den", "c_float"};
  for (const auto& entry : cached_spectrum_range(cfg.cache_path, e, r.lo, r.hi, report.warnings)) {
    report.rows.push_back({exact(entry.k), exact(entry.value.numerator()),
                           exact(entry.value.denominator()), num(entry.value.to_double())});
  }
  return emit(cfg, report, out, 0);
}

int cmd_weyl(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto e = cfg.ellipsoid();
  if (cfg.radii.empty()) throw std::invalid_argument("weyl: at least one radius (-R) is required");
  Report report;
  report.columns = {"R_num", "R_den", "R_float", "count_classes", "count_values"};
  for (const auto& R : cfg.radii) {
    const auto w = weyl_count(e, R);
    report.rows.push_back({exact(R.numerator()), exact(R.denominator()), num(R.to_double()),
                           exact(w.count_classes), exact(w.count_values)});
  }

  const Rational vol = contact_volume(e);
  const Rational oracle = Rational(1) / (Rational(2) * vol);
  report.summary["oracle_coefficient"] = oracle.to_string();
  // The corollary's coefficient (2^d - 1)/vol with d = 1.
  report.summary["stated_coefficient"] = (Rational(1) / vol).to_string();
  if (cfg.radii.size() < 3) {
    report.warnings.push_back("fewer than three radii: fit skipped");
    return emit(cfg, report, out, 0);
  }
  int code = 0;
  try {
    const auto fit = weyl_fit(e, cfg.radii);
    const double stated = (Rational(1) / vol).to_double();
    report.summary["fit_coefficient"] = fit.coefficient;
    report.summary["fit_exponent"] = fit.exponent;
    report.summary["fit_residual"] = fit.residual;
    report.summary["fit_over_oracle"] = fit.coefficient / oracle.to_double();
    report.summary["stated_over_fit"] = stated / fit.coefficient;
    if (std::abs(stated / fit.coefficient - 2.0) < 0.2) {
      report.warnings.push_back("stated coefficient exceeds the fitted one by a factor of about 2");
    }
  } catch (const Error& ex) {
    err << "echspec weyl: " << ex.what() << '\n';
    code = 1;
  }
  return emit(cfg, report, out, code);
}

int cmd_dk(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto e = cfg.ellipsoid();
  const auto r = require_range(cfg);
  Report report;
  report.columns = {"j", "c_num", "c_den", "d", "d_err"};

  const auto entries = cached_spectrum_range(cfg.cache_path, e, r.lo, r.hi, report.warnings);
  std::vector<Rational> capacities;
  capacities.reserve(entries.size());
  for (const auto& entry : entries) capacities.push_back(entry.value);
  const auto points = d_sequence(e, r.lo, capacities);
  for (const auto& p : points) {
    report.rows.push_back({exact(p.j), exact(p.c.numerator()), exact(p.c.denominator()), num(p.d),
                           num(p.d_err)});
  }

  auto windows = nlohmann::ordered_json::array();
  for (const auto& w : window_sups(points)) {
    windows.push_back({{"w", w.w},
                       {"j_at_max", w.j_at_max},
                       {"sup_abs_d", w.sup_abs_d},
                       {"sup_over_j_2_5", w.sup_abs_d / std::pow(static_cast<double>(w.j_at_max), 0.4)}});
  }
  report.summary["windows"] = windows;
  report.summary["reference_abs_limit"] = ((e.a() + e.b()) / Rational(2)).to_double();
  if (!points.empty()) report.summary["d_last"] = points.back().d;

  int code = 0;
  if (windows.size() >= 2) {
    try {
      const auto fit = exponent_fit(points, std::min<int>(cfg.windows, static_cast<int>(windows.size())));
      report.summary["exponent"] = fit.exponent;
      report.summary["exponent_coefficient"] = fit.coefficient;
      report.summary["exponent_residual"] = fit.residual;
    } catch (const std::exception& ex) {
      err << "echspec dk: " << ex.what() << '\n';
      code = 1;
    }
  } else {
    report.warnings.push_back("fewer than two geometric windows: exponent fit skipped");
  }
  return emit(cfg, report, out, code);
}

int cmd_zeta(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto e = cfg.ellipsoid();
  if (cfg.points.empty()) throw std::invalid_argument("zeta: at least one point (-s) is required");
  Report report;
  report.columns = {"convention", "s_re", "s_im", "value_re", "value_im", "err"};
  ZetaOptions check = cfg.zeta;
  check.em_shift += 8.0;
  int code = 0;
  for (const auto conv : conventions(cfg)) {
    for (const auto s : cfg.points) {
      try {
        const auto v = ech_zeta(s, e, conv, cfg.zeta);
        const double diff = std::abs(v - ech_zeta(s, e, conv, check));
        report.rows.push_back({std::string(to_string(conv)), num(s.real()), num(s.imag()), num(v.real()),
                               num(v.imag()), num(diff)});
      } catch (const Error& ex) {
        err << "echspec zeta: " << to_string(conv) << " at s = (" << format_double(s.real()) << ", "
            << format_double(s.imag()) << "): " << ex.what() << '\n';
        code = 1;
      }
    }
  }
  return emit(cfg, report, out, code);
}

int cmd_residues(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto e = cfg.ellipsoid();
  const double a = e.a().to_double();
  const double b = e.b().to_double();
  Report report;
  report.columns = {"convention", "s0", "quantity", "re", "im", "err"};

  LaurentOptions lopts;
  lopts.radius = cfg.laurent_radius;
  lopts.n_points = cfg.laurent_points;
  lopts.tol = std::max(cfg.zeta.tol, 1e-12);
  ZetaOptions check = cfg.zeta;
  check.em_shift += 8.0;

  // Reference values as displayed: Res_{s=2} = 1/(ab), Res_{s=1} = +(1/a + 1/b)/2,
  // value at 0 = 1/4 + (b/a + a/b)/12.
  const Rational ra = e.a();
  const Rational rb = e.b();
  const Rational stated_res2 = Rational(1) / (ra * rb);
  const Rational stated_res1 = (Rational(1) / ra + Rational(1) / rb) / Rational(2);
  const Rational stated_zero = Rational(1, 4) + (rb / ra + ra / rb) / Rational(12);
  report.summary["stated_residue_at_2"] = stated_res2.to_string();
  report.summary["stated_residue_at_1"] = stated_res1.to_string();
  report.summary["stated_value_at_0"] = stated_zero.to_string();

  auto discrepancies = nlohmann::ordered_json::object();
  int code = 0;
  for (const auto conv : conventions(cfg)) {
    const std::string name = to_string(conv);
    auto f = [&](ComplexVal s) { return ech_zeta(s, e, conv, cfg.zeta); };
    auto& d = discrepancies[name];
    try {
      for (const double s0 : {1.0, 2.0}) {
        const auto L = laurent_at(f, s0, lopts);
        report.rows.push_back({name, num(s0), std::string("residue"), num(L.residue.real()),
                               num(L.residue.imag()), num(L.quad_err)});
        report.rows.push_back({name, num(s0), std::string("constant"), num(L.constant.real()),
                               num(L.constant.imag()), num(L.quad_err)});
        const double ref = (s0 == 1.0 ? stated_res1 : stated_res2).to_double();
        d[s0 == 1.0 ? "residue_at_1_minus_stated" : "residue_at_2_minus_stated"] = L.residue.real() - ref;
      }
      const auto v0 = f(0.0);
      const double v0_err = std::abs(v0 - ech_zeta(0.0, e, conv, check));
      report.rows.push_back({name, num(0.0), std::string("value"), num(v0.real()), num(v0.imag()), num(v0_err)});
      d["value_at_0_minus_stated"] = v0.real() - stated_zero.to_double();
    } catch (const Error& ex) {
      err << "echspec residues: " << name << ": " << ex.what() << '\n';
      code = 1;
    }
  }
  for (const auto& [name, d] : discrepancies.items()) {
    for (const auto& [key, value] : d.items()) {
      if (std::abs(value.get<double>()) > 1e-6) {
        report.warnings.push_back(name + ": " + key + " = " + format_double(value.get<double>()));
      }
    }
  }
  report.summary["discrepancy"] = discrepancies;
  report.summary["abs_residue_at_1_expected"] = 0.5 * (1.0 / a + 1.0 / b);
  return emit(cfg, report, out, code);
}

int cmd_envelope(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto& k = cfg.constants;
  k.validate();
  Report report;
  report.columns = {"j",     "r1",   "r2",   "r3",   "F_lo",         "F_hi",          "e_lo",
                    "e_hi",  "c_lo", "c_hi", "width_scaled", "r1_deviation", "admissible"};

  const double jmin = min_admissible_j(k);
  report.summary["rho0"] = rho_zero();
  report.summary["c3"] = k.c3();
  report.summary["min_admissible_j"] = format_double(jmin);
  report.summary["r1_deviation_bound"] = 2.0 * k.c0 * kPi * kPi * 4.0 / k.vol + 1.0;

  int code = 0;
  double width_lo = std::numeric_limits<double>::infinity();
  double width_hi = 0.0;
  double r1_dev_max = 0.0;
  for (int i = 0; i < cfg.j_steps; ++i) {
    const double t = cfg.j_steps == 1 ? 0.0 : static_cast<double>(i) / (cfg.j_steps - 1);
    const double j = cfg.j_min * std::pow(cfg.j_max / cfg.j_min, t);
    try {
      const bool ok = std::pow(j, 0.8) >= r2_threshold(j, k);
      const auto res = cfg.unchecked ? envelope_bounds(j, k) : capacity_envelope(j, k);
      const double width = (res.c_hi - res.c_lo) / std::pow(j, 0.4);
      const double dev = res.r1 - 2.0 * kPi * std::sqrt(j / k.vol);
      width_lo = std::min(width_lo, width);
      width_hi = std::max(width_hi, width);
      r1_dev_max = std::max(r1_dev_max, std::abs(dev));
      report.rows.push_back({num(j), num(res.r1), num(res.r2), num(res.r3), num(res.F_lo), num(res.F_hi),
                             num(res.e_lo), num(res.e_hi), num(res.c_lo), num(res.c_hi), num(width), num(dev),
                             std::string(ok ? "1" : "0")});
    } catch (const Error& ex) {
      err << "echspec envelope: j = " << format_double(j) << ": " << ex.what() << '\n';
      code = 1;
    }
  }
  if (!report.rows.empty()) {
    report.summary["width_scaled_variation"] = width_hi / width_lo - 1.0;
    report.summary["r1_deviation_max"] = r1_dev_max;
  }
  return emit(cfg, report, out, code);
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.command) {
      case Subcommand::Capacities:
        return cmd_capacities(cfg, out, err);
      case Subcommand::Weyl:
        return cmd_weyl(cfg, out, err);
      case Subcommand::Dk:
        return cmd_dk(cfg, out, err);
      case Subcommand::Zeta:
        return cmd_zeta(cfg, out, err);
      case Subcommand::Residues:
        return cmd_residues(cfg, out, err);
      case Subcommand::Envelope:
        return cmd_envelope(cfg, out, err);
    }
  } catch (const std::invalid_argument& ex) {
    err << "echspec: " << ex.what() << '\n';
    return 2;
  } catch (const std::exception& ex) {
    err << "echspec: " << ex.what() << '\n';
    return 1;
  }
  return 2;
}

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = parse_args(argc, argv);
  } catch (const UsageError& u) {
    (u.exit_code == 0 ? out : err) << u.message;
    return u.exit_code;
  }
  return run(cfg, out, err);
}

}  // namespace echspec::cli
