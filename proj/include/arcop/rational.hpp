#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace arcop {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Rat rat(long n, long d = 1) { return Rat(n, d); }

// Floor of a rational as an integer.
inline Int rat_floor(const Rat& r) {
  Int q = num(r) / den(r);
  if (num(r) < 0 && q * den(r) != num(r)) --q;
  return q;
}

// r mod m for m > 0, result in [0, m).
inline Rat rat_mod(const Rat& r, const Rat& m) {
  Rat q = r / m;
  Rat res = r - Rat(rat_floor(q)) * m;
  if (res < 0) res += m;
  if (res >= m) res -= m;
  return res;
}

// Fractional part, in [0, 1).
inline Rat frac(const Rat& r) { return rat_mod(r, Rat(1)); }

inline Int int_lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return a / boost::multiprecision::gcd(a, b) * b;
}

// lcm of denominators of a list of rationals (at least 1).
inline Int lcm_den(const std::vector<Rat>& rs) {
  Int l = 1;
  for (const auto& r : rs) l = int_lcm(l, den(r));
  return l;
}

inline std::string rat_str(const Rat& r) {
  std::string s = num(r).str();
  if (den(r) != 1) s += "/" + den(r).str();
  return s;
}

// Parses "p" or "p/q" with q > 0 and gcd(p,q)=1; rejects non-canonical input.
inline std::optional<Rat> rat_parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Int n(s);
      return Rat(n);
    }
    Int n(s.substr(0, slash));
    Int d(s.substr(slash + 1));
    if (d <= 0) return std::nullopt;
    if (boost::multiprecision::gcd(boost::multiprecision::abs(n), d) != 1) return std::nullopt;
    return Rat(n, d);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace arcop
