#pragma once

#include <stdexcept>
#include <string>

namespace echspec {

// Base for numerical failures. Precondition violations (bad ranges, negative
// indices, unparsable input) are reported as std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Evaluation requested within the guard radius of a pole.
class PoleProximity : public Error {
 public:
  using Error::Error;
};

// Evaluation point lies beyond the configured continuation depth.
class DepthExceeded : public Error {
 public:
  using Error::Error;
};

// An iterative procedure (quadrature doubling, bracket growth) failed to settle.
class NonConvergent : public Error {
 public:
  using Error::Error;
};

// A "sup{r | ...}" defining set is empty.
class NoRoot : public Error {
 public:
  using Error::Error;
};

// The capacity envelope was requested below the admissible grading index.
class TooSmallJ : public Error {
 public:
  TooSmallJ(const std::string& what, double min_admissible_j)
      : Error(what), min_admissible_j_(min_admissible_j) {}

  // Smallest j found for which j^{4/5} >= r2_threshold(j); NaN when the
  // search could not locate one.
  double min_admissible_j() const noexcept { return min_admissible_j_; }

 private:
  double min_admissible_j_;
};

}  // namespace echspec
