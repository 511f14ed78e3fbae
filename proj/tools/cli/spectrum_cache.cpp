#include "spectrum_cache.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

namespace echspec::cli {
namespace {

std::string field(const std::string& token, const char* key) {
  const std::string prefix = std::string(key) + "=";
  if (token.rfind(prefix, 0) != 0) throw CacheError("cache header: expected " + prefix);
  return token.substr(prefix.size());
}

}  // namespace

SpectrumCache SpectrumCache::build(const Ellipsoid& e, const BigInt& kmax) {
  SpectrumCache c;
  c.a_ = e.a();
  c.b_ = e.b();
  for (auto& entry : spectrum_range(e, 0, kmax)) c.values_.push_back(std::move(entry.value));
  return c;
}

SpectrumCache SpectrumCache::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheError("cannot open cache file " + path);

  std::string line;
  if (!std::getline(in, line)) throw CacheError("empty cache file");
  std::istringstream header(line);
  std::string magic, version, a, b, kmax, extra;
  header >> magic >> version >> a >> b >> kmax;
  if (magic != kMagic || version != kVersion || (header >> extra)) {
    throw CacheError("unrecognised cache header '" + line + "'");
  }

  SpectrumCache c;
  BigInt k_last;
  try {
    c.a_ = Rational::parse(field(a, "a"));
    c.b_ = Rational::parse(field(b, "b"));
    k_last = parse_bigint(field(kmax, "kmax"));
  } catch (const std::invalid_argument& e) {
    throw CacheError(std::string("cache header: ") + e.what());
  }
  if (c.a_.sign() <= 0 || c.b_.sign() <= 0 || sgn(k_last) < 0 || k_last >= kMaxEntries) {
    throw CacheError("cache header out of range");
  }

  const long expected = k_last.get_si() + 1;
  c.values_.reserve(static_cast<std::size_t>(expected));
  while (std::getline(in, line)) {
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) throw CacheError("malformed cache row '" + line + "'");
    Rational v;
    try {
      const BigInt k = parse_bigint(line.substr(0, c1));
      if (k != static_cast<long>(c.values_.size())) throw CacheError("cache rows out of order at k = " + k.get_str());
      v = Rational(parse_bigint(line.substr(c1 + 1, c2 - c1 - 1)), parse_bigint(line.substr(c2 + 1)));
    } catch (const std::invalid_argument& e) {
      throw CacheError(std::string("malformed cache row: ") + e.what());
    }
    if (!c.values_.empty() && v < c.values_.back()) throw CacheError("cache values decrease");
    c.values_.push_back(std::move(v));
  }
  if (static_cast<long>(c.values_.size()) != expected) throw CacheError("cache row count differs from kmax");
  return c;
}

void SpectrumCache::save(const std::string& path) const {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot write cache file " + tmp.string());
    out << kMagic << ' ' << kVersion << " a=" << a_.to_fraction_string() << " b=" << b_.to_fraction_string()
        << " kmax=" << kmax().get_str() << '\n';
    for (std::size_t k = 0; k < values_.size(); ++k) {
      out << k << ',' << values_[k].numerator().get_str() << ',' << values_[k].denominator().get_str() << '\n';
    }
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw CacheError("failed writing cache file " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw CacheError("cannot replace cache file " + path);
  }
}

bool SpectrumCache::matches(const Ellipsoid& e) const {
  return (a_ == e.a() && b_ == e.b()) || (a_ == e.b() && b_ == e.a());
}

std::vector<SpectrumEntry> SpectrumCache::slice(const BigInt& k0, const BigInt& k1) const {
  if (sgn(k0) < 0 || k0 > k1 || k1 > kmax()) throw std::invalid_argument("cache slice out of range");
  std::vector<SpectrumEntry> out;
  for (long k = k0.get_si(); k <= k1.get_si(); ++k) {
    out.push_back({BigInt(k), values_[static_cast<std::size_t>(k)]});
  }
  return out;
}

std::vector<SpectrumEntry> cached_spectrum_range(const std::string& path, const Ellipsoid& e,
                                                 const BigInt& k0, const BigInt& k1,
                                                 std::vector<std::string>& warnings) {
  if (path.empty()) return spectrum_range(e, k0, k1);
  if (sgn(k0) < 0 || k0 > k1) throw std::invalid_argument("spectrum range: need 0 <= k0 <= k1");
  if (k1 >= SpectrumCache::kMaxEntries) {
    warnings.push_back("range exceeds the cache limit; cache not used");
    return spectrum_range(e, k0, k1);
  }

  if (std::filesystem::exists(path)) {
    try {
      const auto cache = SpectrumCache::load(path);
      if (!cache.matches(e)) {
        warnings.push_back("cache " + path + " holds a different ellipsoid; overwritten");
      } else if (cache.values().back() != nth_capacity(e, cache.kmax())) {
        warnings.push_back("cache " + path + " fails the spot check; rebuilt");
      } else if (cache.kmax() >= k1) {
        return cache.slice(k0, k1);
      }
    } catch (const CacheError& err) {
      warnings.push_back(std::string("cache ignored: ") + err.what());
    }
  }

  const auto fresh = SpectrumCache::build(e, k1);
  try {
    fresh.save(path);
  } catch (const CacheError& err) {
    warnings.push_back(std::string("cache not written: ") + err.what());
  }
  return fresh.slice(k0, k1);
}

}  // namespace echspec::cli
