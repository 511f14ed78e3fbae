#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "echspec/spectrum.hpp"

namespace echspec::cli {

class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// On-disk prefix N(a,b)_0..N(a,b)_kmax. Line 1 is
// "ECHSPEC v1 a=<p/q> b=<p/q> kmax=<n>", followed by "k,num,den" rows.
class SpectrumCache {
 public:
  static constexpr const char* kMagic = "ECHSPEC";
  static constexpr const char* kVersion = "v1";
  // Prefixes longer than this are computed but not cached.
  static constexpr long kMaxEntries = 20'000'000;

  static SpectrumCache build(const Ellipsoid& e, const BigInt& kmax);
  // Throws CacheError on a malformed header, gaps, unsorted indices or
  // decreasing values.
  static SpectrumCache load(const std::string& path);

  // Writes to a temporary file next to path and renames it into place.
  void save(const std::string& path) const;

  // Same spectrum as e (the order of a and b is irrelevant).
  bool matches(const Ellipsoid& e) const;

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  BigInt kmax() const { return BigInt(static_cast<unsigned long>(values_.size())) - 1; }
  const std::vector<Rational>& values() const { return values_; }

  std::vector<SpectrumEntry> slice(const BigInt& k0, const BigInt& k1) const;

 private:
  Rational a_;
  Rational b_;
  std::vector<Rational> values_;
};

// spectrum_range(e, k0, k1), served from and refreshed into the cache file at
// path when path is non-empty. Unreadable or stale caches are rebuilt; the
// reason is appended to warnings.
std::vector<SpectrumEntry> cached_spectrum_range(const std::string& path, const Ellipsoid& e,
                                                 const BigInt& k0, const BigInt& k1,
                                                 std::vector<std::string>& warnings);

}  // namespace echspec::cli
