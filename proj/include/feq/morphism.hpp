#pragma once

#include <algorithm>
#include <functional>

#include "feq/linalg.hpp"
#include "feq/semigroup.hpp"

namespace feq {

/// Permutation sigma of the carrier with sigma(xy) = sigma(x)sigma(y) and
/// sigma(sigma(x)) = x.
struct InvolutiveAutomorphism {
  std::vector<int> perm;

  int operator()(int x) const { return perm[x]; }

  static bool valid_for(const FiniteSemigroup& s, const std::vector<int>& p) {
    const int n = s.order();
    for (int x = 0; x < n; ++x)
      if (p[p[x]] != x) return false;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (p[s.mul(x, y)] != s.mul(p[x], p[y])) return false;
    return true;
  }
};

inline std::vector<InvolutiveAutomorphism> enumerate_involutive_automorphisms(const FiniteSemigroup& s) {
  const int n = s.order();
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::vector<InvolutiveAutomorphism> out;
  do {
    if (InvolutiveAutomorphism::valid_for(s, p)) out.push_back({p});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// chi with chi(xy) = chi(x)chi(y); on a finite carrier every value is zero or
/// a root of unity whose order divides the element's eventual period.
struct MultiplicativeFunction {
  CFun values;

  bool is_identically_zero() const { return cfun_is_zero(values); }

  static bool valid_for(const FiniteSemigroup& s, const CFun& v) {
    for (int x = 0; x < s.order(); ++x)
      for (int y = 0; y < s.order(); ++y)
        if (v[s.mul(x, y)] != v[x] * v[y]) return false;
    return true;
  }
};

/// Least m >= 1 with x^k = x^(k+m) for some k >= 1.
inline int element_period(const FiniteSemigroup& s, int x) {
  std::vector<int> powers;  // powers[t] = x^(t+1)
  int cur = x;
  for (;;) {
    auto it = std::find(powers.begin(), powers.end(), cur);
    if (it != powers.end()) return static_cast<int>(powers.end() - it);
    powers.push_back(cur);
    cur = s.mul(cur, x);
  }
}

/// Complete list of multiplicative functions, including the zero function.
/// Backtracking over per-element candidate sets {0} u {m-th roots of unity},
/// m the element period, with incremental consistency pruning.
inline std::vector<MultiplicativeFunction> enumerate_multiplicative(const FiniteSemigroup& s) {
  const int n = s.order();
  std::vector<std::vector<Scalar>> candidates(n);
  for (int x = 0; x < n; ++x) {
    candidates[x].push_back(Scalar::zero());
    const int m = element_period(s, x);
    for (int j = 0; j < m; ++j) candidates[x].push_back(Scalar::root_of_unity(j, m));
  }

  std::vector<MultiplicativeFunction> out;
  CFun v(n);
  std::vector<bool> assigned(n, false);

  const auto consistent_up_to = [&](int t) {
    // check pairs (x,y) whose largest involved index is t
    for (int x = 0; x <= t; ++x)
      for (int y = 0; y <= t; ++y) {
        const int xy = s.mul(x, y);
        if (std::max({x, y, xy}) != t) continue;
        if (!assigned[x] || !assigned[y] || !assigned[xy]) continue;
        if (v[xy] != v[x] * v[y]) return false;
      }
    return true;
  };

  const std::function<void(int)> rec = [&](int t) {
    if (t == n) {
      out.push_back({v});
      return;
    }
    for (const auto& c : candidates[t]) {
      v[t] = c;
      assigned[t] = true;
      if (consistent_up_to(t)) rec(t + 1);
      assigned[t] = false;
    }
  };
  rec(0);
  return out;
}

/// Multiplicative mu paired with sigma via mu(x*sigma(x)) = 1 for all x;
/// such a mu is nowhere zero.
struct MuFunction {
  CFun values;

  static bool admissible_for(const FiniteSemigroup& s, const InvolutiveAutomorphism& sigma, const CFun& v) {
    if (!MultiplicativeFunction::valid_for(s, v)) return false;
    for (int x = 0; x < s.order(); ++x)
      if (!(v[s.mul(x, sigma(x))] == Scalar::one())) return false;
    return true;
  }
};

inline std::vector<MuFunction> enumerate_mu(const FiniteSemigroup& s, const InvolutiveAutomorphism& sigma) {
  std::vector<MuFunction> out;
  for (const auto& chi : enumerate_multiplicative(s)) {
    bool ok = true;
    for (int x = 0; x < s.order() && ok; ++x) ok = chi.values[s.mul(x, sigma(x))] == Scalar::one();
    if (ok) out.push_back({chi.values});
  }
  return out;
}

/// f*(x) = mu(x) f(sigma(x))
inline CFun star(const FiniteSemigroup& s, const InvolutiveAutomorphism& sigma, const MuFunction& mu,
                 const CFun& f) {
  CFun r(s.order());
  for (int x = 0; x < s.order(); ++x) r[x] = mu.values[x] * f[sigma(x)];
  return r;
}

inline CFun even_part(const FiniteSemigroup& s, const InvolutiveAutomorphism& sigma, const MuFunction& mu,
                      const CFun& f) {
  const CFun fs = star(s, sigma, mu, f);
  CFun r(s.order());
  const Rat half(1, 2);
  for (int x = 0; x < s.order(); ++x) r[x] = (f[x] + fs[x]).scaled(half);
  return r;
}

inline CFun odd_part(const FiniteSemigroup& s, const InvolutiveAutomorphism& sigma, const MuFunction& mu,
                     const CFun& f) {
  const CFun fs = star(s, sigma, mu, f);
  CFun r(s.order());
  const Rat half(1, 2);
  for (int x = 0; x < s.order(); ++x) r[x] = (f[x] - fs[x]).scaled(half);
  return r;
}

/// Rational-valued additive function on a subsemigroup domain; values are
/// stored for the full carrier and are zero outside the domain.
struct AdditiveFunction {
  ElementSet domain;
  std::vector<Rat> values;

  Rat at(int x) const { return values[x]; }
};

/// Basis of {A : A(xy) = A(x) + A(y) on the domain}, by exact rational
/// elimination. Finite periods force m*A(x) = 0, so on any finite carrier the
/// computed basis comes out empty; the solve is still performed, not assumed.
inline std::vector<AdditiveFunction> enumerate_additive(const FiniteSemigroup& s, const ElementSet& domain) {
  if (!is_subsemigroup(s, domain)) throw std::invalid_argument("enumerate_additive: domain not a subsemigroup");
  const auto elems = domain.to_vector();
  const int m = static_cast<int>(elems.size());
  std::vector<int> col(s.order(), -1);
  for (int j = 0; j < m; ++j) col[elems[j]] = j;

  std::vector<std::vector<Rat>> rows;
  for (int x : elems)
    for (int y : elems) {
      std::vector<Rat> row(m, Rat(0));
      row[col[s.mul(x, y)]] += 1;
      row[col[x]] -= 1;
      row[col[y]] -= 1;
      rows.push_back(std::move(row));
    }

  std::vector<AdditiveFunction> basis;
  for (const auto& vec : nullspace_basis_field<Rat>(rows, m)) {
    AdditiveFunction a{domain, std::vector<Rat>(s.order(), Rat(0))};
    for (int j = 0; j < m; ++j) a.values[elems[j]] = vec[j];
    basis.push_back(std::move(a));
  }
  return basis;
}

}  // namespace feq
