#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "feq/rational.hpp"

namespace feq {

namespace detail {

// Dense polynomials over Rat, index = degree. Used only for reduction modulo
// cyclotomic polynomials, so everything stays tiny.
using Poly = std::vector<Rat>;

inline void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

// Remainder of a modulo monic m.
inline Poly poly_mod_monic(Poly a, const Poly& m) {
  const int dm = poly_deg(m);
  for (int d = poly_deg(a); d >= dm; --d) {
    Rat c = a[d];
    if (c == 0) continue;
    for (int j = 0; j <= dm; ++j) a[d - dm + j] -= Rat(c * m[j]);
  }
  a.resize(std::max(dm, 0));
  poly_trim(a);
  return a;
}

// Exact quotient a / b, asserting zero remainder. b need not be monic.
inline Poly poly_div_exact(Poly a, const Poly& b) {
  const int db = poly_deg(b);
  Poly q(std::max(poly_deg(a) - db + 1, 0), Rat(0));
  for (int d = poly_deg(a); d >= db; --d) {
    if (a[d] == 0) continue;
    Rat c = Rat(a[d] / b[db]);
    q[d - db] = c;
    for (int j = 0; j <= db; ++j) a[d - db + j] -= Rat(c * b[j]);
  }
  poly_trim(a);
  if (!a.empty()) throw std::logic_error("poly_div_exact: nonzero remainder");
  return q;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += Rat(a[i] * b[j]);
  return r;
}

// Phi_N, computed by dividing x^N - 1 by all Phi_d for proper divisors d.
inline const Poly& cyclotomic(long long n) {
  static std::map<long long, Poly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<long long> stack{n};
  while (!stack.empty()) {
    long long m = stack.back();
    if (cache.count(m)) {
      stack.pop_back();
      continue;
    }
    bool ready = true;
    for (long long d = 1; d < m; ++d)
      if (m % d == 0 && !cache.count(d)) {
        stack.push_back(d);
        ready = false;
      }
    if (!ready) continue;
    Poly p(m + 1, Rat(0));
    p[0] = -1;
    p[m] = 1;
    for (long long d = 1; d < m; ++d)
      if (m % d == 0) p = poly_div_exact(std::move(p), cache.at(d));
    cache.emplace(m, std::move(p));
    stack.pop_back();
  }
  return cache.at(n);
}

// u with u*a == 1 mod m; requires gcd(a, m) = 1 (m irreducible, a nonzero mod m).
inline Poly poly_modinv(Poly a, const Poly& m) {
  Poly r0 = m, r1 = std::move(a);
  Poly t0, t1{Rat(1)};
  poly_trim(r1);
  while (!r1.empty()) {
    // divmod r0 by r1
    const int d1 = poly_deg(r1);
    Poly q(std::max(poly_deg(r0) - d1 + 1, 0), Rat(0));
    Poly rem = r0;
    for (int d = poly_deg(rem); d >= d1; --d) {
      if (rem[d] == 0) continue;
      Rat c = Rat(rem[d] / r1[d1]);
      q[d - d1] = c;
      for (int j = 0; j <= d1; ++j) rem[d - d1 + j] -= Rat(c * r1[j]);
    }
    poly_trim(q);
    poly_trim(rem);
    r0 = std::move(r1);
    r1 = std::move(rem);
    Poly qt1 = poly_mul(q, t1);
    Poly t2 = t0;
    t2.resize(std::max(t2.size(), qt1.size()), Rat(0));
    for (size_t i = 0; i < qt1.size(); ++i) t2[i] -= qt1[i];
    poly_trim(t2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (poly_deg(r0) != 0) throw std::logic_error("poly_modinv: inputs not coprime");
  for (auto& c : t0) c = Rat(c / r0[0]);
  return poly_mod_monic(std::move(t0), m);
}

}  // namespace detail

/// Exact complex scalar: a finite sum of rational multiples of roots of unity,
/// kept reduced modulo the cyclotomic polynomial of the common exponent
/// denominator. Zero-testing and equality are exact; the empty sum is zero.
/// Values of characters, mu, and all solution functions on finite carriers
/// live here.
class Scalar {
 public:
  struct Term {
    Rat coef;  // rational; i is folded into the exponent as e^(2*pi*i/4)
    Frac exp;  // reduced, in [0,1)
  };

  Scalar() = default;

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return from_int(1); }
  static Scalar from_int(long long v) { return rational(Rat(v)); }
  static Scalar rational(Rat re, Rat im = Rat(0)) {
    Scalar s;
    if (re != 0) s.terms_.push_back({std::move(re), Frac(0, 1)});
    if (im != 0) s.terms_.push_back({std::move(im), Frac(1, 4)});
    s.reduce();
    return s;
  }
  /// e^(2*pi*i*num/den)
  static Scalar root_of_unity(long long num, long long den) {
    Scalar s;
    s.terms_.push_back({Rat(1), Frac(num, den)});
    s.reduce();
    return s;
  }
  /// (re + i*im) * e^(2*pi*i*num/den)
  static Scalar rou_term(const Rat& re, const Rat& im, long long num, long long den) {
    Scalar s;
    const Frac e(num, den);
    if (re != 0) s.terms_.push_back({re, e});
    if (im != 0) s.terms_.push_back({im, e + Frac(1, 4)});
    s.reduce();
    return s;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].exp == Frac(0, 1) && terms_[0].coef == 1; }

  const std::vector<Term>& terms() const { return terms_; }

  /// True when the reduced form lies in Q(i), i.e. uses only exponents k/4.
  bool is_rational_complex() const {
    for (const auto& t : terms_)
      if (t.exp.den != 1 && t.exp.den != 2 && t.exp.den != 4) return false;
    return true;
  }
  Rat re_rational() const { return axis_part(Frac(0, 1)) - axis_part(Frac(1, 2)); }
  Rat im_rational() const { return axis_part(Frac(1, 4)) - axis_part(Frac(3, 4)); }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    r.terms_.insert(r.terms_.end(), a.terms_.begin(), a.terms_.end());
    r.terms_.insert(r.terms_.end(), b.terms_.begin(), b.terms_.end());
    r.reduce();
    return r;
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
  Scalar operator-() const {
    Scalar r = *this;
    for (auto& t : r.terms_) t.coef = Rat(-t.coef);
    return r;  // negation preserves reducedness
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar r;
    r.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
      for (const auto& tb : b.terms_) r.terms_.push_back({Rat(ta.coef * tb.coef), ta.exp + tb.exp});
    r.reduce();
    return r;
  }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar scaled(const Rat& c) const {
    if (c == 0) return Scalar();
    Scalar r = *this;
    for (auto& t : r.terms_) t.coef = Rat(t.coef * c);
    return r;  // nonzero rational scaling preserves reducedness
  }

  /// Multiplicative inverse in the cyclotomic field; throws on zero.
  Scalar inverse() const {
    if (is_zero()) throw std::domain_error("Scalar::inverse of zero");
    const long long n = ambient_order();
    if (n == 1) {
      Scalar r;
      r.terms_.push_back({Rat(1 / terms_[0].coef), Frac(0, 1)});
      return r;
    }
    detail::Poly p(n, Rat(0));
    for (const auto& t : terms_) p[t.exp.num * (n / t.exp.den)] += t.coef;
    detail::poly_trim(p);
    detail::Poly inv = detail::poly_modinv(std::move(p), detail::cyclotomic(n));
    Scalar r;
    for (size_t j = 0; j < inv.size(); ++j)
      if (inv[j] != 0) r.terms_.push_back({inv[j], Frac(static_cast<long long>(j), n)});
    r.reduce();
    return r;
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  Scalar conj() const {
    Scalar r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.coef, t.exp.negated()});
    r.reduce();
    return r;
  }

  std::complex<double> to_complex() const {
    std::complex<double> z(0.0, 0.0);
    for (const auto& t : terms_) {
      const double angle = 2.0 * M_PI * static_cast<double>(t.exp.num) / static_cast<double>(t.exp.den);
      z += rat_to_double(t.coef) * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return z;
  }
  double abs() const { return std::abs(to_complex()); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return (a - b).is_zero(); }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < terms_.size(); ++i) {
      if (i) out += " + ";
      out += rat_to_string(terms_[i].coef);
      if (terms_[i].exp.num != 0) out += "*w(" + terms_[i].exp.str() + ")";
    }
    return out;
  }

 private:
  std::vector<Term> terms_;

  Rat axis_part(const Frac& e) const {
    for (const auto& t : terms_)
      if (t.exp == e) return t.coef;
    return Rat(0);
  }

  long long ambient_order() const {
    long long n = 1;
    for (const auto& t : terms_) n = lcm_ll(n, t.exp.den);
    return n;
  }

  void reduce() {
    // combine equal exponents
    std::map<Frac, Rat> acc;
    for (auto& t : terms_) acc[t.exp] += t.coef;
    for (;;) {
      long long n = 1;
      for (auto it = acc.begin(); it != acc.end();) {
        if (it->second == 0) {
          it = acc.erase(it);
        } else {
          n = lcm_ll(n, it->first.den);
          ++it;
        }
      }
      if (acc.empty() || n == 1) break;
      detail::Poly p(n, Rat(0));
      for (const auto& [e, c] : acc) p[e.num * (n / e.den)] += c;
      detail::poly_trim(p);
      p = detail::poly_mod_monic(std::move(p), detail::cyclotomic(n));
      std::map<Frac, Rat> next;
      long long n2 = 1;
      for (size_t j = 0; j < p.size(); ++j)
        if (p[j] != 0) {
          Frac e(static_cast<long long>(j), n);
          next[e] = p[j];
          n2 = lcm_ll(n2, e.den);
        }
      const bool stable = (n2 == n);
      acc = std::move(next);
      if (stable) break;
    }
    terms_.clear();
    terms_.reserve(acc.size());
    for (auto& [e, c] : acc) terms_.push_back({std::move(c), e});
  }
};

}  // namespace feq
