#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace feq {

using Rat = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

inline std::string rat_to_string(const Rat& r) { return r.str(); }

/// Parses "p", "-p" or "p/q". Canonicalizes and rejects zero denominators.
inline Rat rat_from_string(const std::string& s) {
  const auto bad = [&] { return std::invalid_argument("bad rational: '" + s + "'"); };
  if (s.empty()) throw bad();
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(s));
    BigInt p(s.substr(0, slash));
    BigInt q(s.substr(slash + 1));
    if (q == 0) throw bad();
    return Rat(p) / Rat(q);  // division canonicalizes
  } catch (const std::invalid_argument&) {
    throw;
  } catch (...) {
    throw bad();
  }
}

inline double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

/// Reduced fraction in [0, 1), used for root-of-unity exponents e^(2*pi*i*num/den).
struct Frac {
  long long num = 0;
  long long den = 1;

  Frac() = default;
  Frac(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("Frac: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    n %= d;
    if (n < 0) n += d;
    const long long g = std::gcd(n, d);
    num = n / g;
    den = d / g;
  }

  friend Frac operator+(Frac a, Frac b) {
    const long long g = std::gcd(a.den, b.den);
    const long long l = a.den / g * b.den;
    return Frac(a.num * (l / a.den) + b.num * (l / b.den), l);
  }
  Frac negated() const { return Frac(den - num, den); }  // exponent of the conjugate

  friend bool operator==(const Frac&, const Frac&) = default;
  friend bool operator<(const Frac& a, const Frac& b) {
    return a.num * b.den < b.num * a.den;  // denominators stay small
  }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

inline long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

}  // namespace feq
