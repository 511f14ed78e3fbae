#pragma once

#include <functional>

#include "echspec/zeta.hpp"

namespace echspec {

struct LaurentExpansion {
  ComplexVal center;
  ComplexVal residue;   // c_{-1}
  ComplexVal constant;  // c_0
  double quad_err = 0.0;
};

struct LaurentOptions {
  double radius = 0.3;
  int n_points = 64;
  // Doubling n_points may move c_{-1} or c_0 by at most 10 * tol.
  double tol = 1e-9;
  double max_radius = 0.4;
};

// c_{-1} and c_0 of f at s0 from the trapezoidal rule on |s - s0| = radius.
// f must be analytic on the closed disc except for a possible pole at s0. The
// estimate with 2*n_points nodes is returned; quad_err is its distance to the
// n_points estimate. Throws NonConvergent when that distance exceeds 10*tol and
// std::invalid_argument for radius outside (0, max_radius] or n_points < 32.
LaurentExpansion laurent_at(const std::function<ComplexVal(ComplexVal)>& f, ComplexVal s0,
                            const LaurentOptions& opts = {});

}  // namespace echspec
