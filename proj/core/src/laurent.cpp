#include "echspec/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "echspec/errors.hpp"

namespace echspec {
namespace {

struct Coefficients {
  ComplexVal residue;
  ComplexVal constant;
};

Coefficients trapezoid(const std::function<ComplexVal(ComplexVal)>& f, ComplexVal s0, double radius,
                       int n) {
  ComplexVal c_m1 = 0.0;
  ComplexVal c_0 = 0.0;
  for (int k = 0; k < n; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / n;
    const ComplexVal offset = std::polar(radius, theta);
    const ComplexVal value = f(s0 + offset);
    c_m1 += value * offset;
    c_0 += value;
  }
  return {c_m1 / static_cast<double>(n), c_0 / static_cast<double>(n)};
}

}  // namespace

LaurentExpansion laurent_at(const std::function<ComplexVal(ComplexVal)>& f, ComplexVal s0,
                            const LaurentOptions& opts) {
  if (!(opts.radius > 0.0) || opts.radius > opts.max_radius) {
    throw std::invalid_argument("laurent_at: radius must lie in (0, max_radius]");
  }
  if (opts.n_points < 32) throw std::invalid_argument("laurent_at: n_points must be >= 32");

  const auto coarse = trapezoid(f, s0, opts.radius, opts.n_points);
  const auto fine = trapezoid(f, s0, opts.radius, 2 * opts.n_points);
  const double err =
      std::max(std::abs(fine.residue - coarse.residue), std::abs(fine.constant - coarse.constant));
  if (!std::isfinite(err) || err > 10.0 * opts.tol) {
    throw NonConvergent("laurent_at: quadrature changed by " + std::to_string(err) +
                        " on doubling the node count");
  }
  return {s0, fine.residue, fine.constant, err};
}

}  // namespace echspec
