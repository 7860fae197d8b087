#pragma once

#include "feq/residual.hpp"

namespace feq {

enum class Clause {
  KIdenticallyZero,
  KNotVanishingOnS2,
  C1Zero,
  ChiNotMultiplicative,
  ChiIsZero,
  ChiEqualsChiStar,
  ChiNotSelfStar,
  AIdenticallyZero,
  ANotAdditive,
  ANotOdd,
  RhoNotOdd,
  ConditionIViolated,
  ConditionIIViolated,
  KNotAbelian,
  ThetaNotInNullspace,
  AlphaBetaBothZero,
};

inline const char* clause_name(Clause c) {
  switch (c) {
    case Clause::KIdenticallyZero: return "KIdenticallyZero";
    case Clause::KNotVanishingOnS2: return "KNotVanishingOnS2";
    case Clause::C1Zero: return "C1Zero";
    case Clause::ChiNotMultiplicative: return "ChiNotMultiplicative";
    case Clause::ChiIsZero: return "ChiIsZero";
    case Clause::ChiEqualsChiStar: return "ChiEqualsChiStar";
    case Clause::ChiNotSelfStar: return "ChiNotSelfStar";
    case Clause::AIdenticallyZero: return "AIdenticallyZero";
    case Clause::ANotAdditive: return "ANotAdditive";
    case Clause::ANotOdd: return "ANotOdd";
    case Clause::RhoNotOdd: return "RhoNotOdd";
    case Clause::ConditionIViolated: return "ConditionIViolated";
    case Clause::ConditionIIViolated: return "ConditionIIViolated";
    case Clause::KNotAbelian: return "KNotAbelian";
    case Clause::ThetaNotInNullspace: return "ThetaNotInNullspace";
    case Clause::AlphaBetaBothZero: return "AlphaBetaBothZero";
  }
  return "?";
}

/// Violated descriptor precondition; the message names the clause and, where
/// one exists, a witness.
struct DescriptorError : std::runtime_error {
  Clause clause;
  DescriptorError(Clause c, const std::string& detail = {})
      : std::runtime_error(std::string(clause_name(c)) + (detail.empty() ? "" : ": " + detail)), clause(c) {}
};

struct E2Solution {
  CFun k, l;
};
struct E1Solution {
  CFun f, g, h;
};

inline bool in_nullspace(const Context& ctx, const CFun& theta) {
  const int n = ctx.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!(theta[ctx.s.mul(x, y)] - ctx.mu.values[y] * theta[ctx.s.mul(ctx.sigma(y), x)]).is_zero())
        return false;
  return true;
}

/// (chi + chi*)/2 and (chi - chi*)/2
inline CFun even_combination(const Context& ctx, const CFun& chi) { return ctx.even_of(chi); }
inline CFun odd_combination(const Context& ctx, const CFun& chi) { return ctx.odd_of(chi); }

namespace detail {

inline void require_multiplicative(const Context& ctx, const CFun& chi) {
  if (!MultiplicativeFunction::valid_for(ctx.s, chi)) throw DescriptorError(Clause::ChiNotMultiplicative);
}

// A is read only on outside = S \ I_chi: additive there, odd under sigma, not
// identically zero there.
inline void require_valid_additive(const Context& ctx, const ElementSet& outside, const CFun& a) {
  for (int x : outside.to_vector())
    for (int y : outside.to_vector()) {
      const int xy = ctx.s.mul(x, y);
      if (!(a[xy] - a[x] - a[y]).is_zero())
        throw DescriptorError(Clause::ANotAdditive,
                              "A(" + std::to_string(x) + "*" + std::to_string(y) + ") != A(x)+A(y)");
    }
  bool nonzero = false;
  for (int x : outside.to_vector()) nonzero = nonzero || !a[x].is_zero();
  if (!nonzero) throw DescriptorError(Clause::AIdenticallyZero);
  for (int x : outside.to_vector())
    if (!(a[ctx.sigma(x)] + a[x]).is_zero())
      throw DescriptorError(Clause::ANotOdd, "at x=" + std::to_string(x));
}

}  // namespace detail

/// Family (1) of the mu-sine subtraction law: k arbitrary nonzero vanishing on
/// S^2, l = c k.
inline E2Solution gen_e2_family1(const Context& ctx, const CFun& k, const Scalar& c) {
  if (cfun_is_zero(k)) throw DescriptorError(Clause::KIdenticallyZero);
  const ElementSet sq = squared_set(ctx.s);
  for (int x : sq.to_vector())
    if (!k[x].is_zero())
      throw DescriptorError(Clause::KNotVanishingOnS2, "k(" + std::to_string(x) + ") != 0 on S^2");
  CFun l(ctx.order());
  for (int x = 0; x < ctx.order(); ++x) l[x] = c * k[x];
  return {k, l};
}

/// Family (2): k = c1 (chi - chi*)/2, l = (chi + chi*)/2 + c2 (chi - chi*)/2.
inline E2Solution gen_e2_family2(const Context& ctx, const CFun& chi, const Scalar& c1, const Scalar& c2) {
  detail::require_multiplicative(ctx, chi);
  if (c1.is_zero()) throw DescriptorError(Clause::C1Zero);
  const CFun odd = odd_combination(ctx, chi);
  if (cfun_is_zero(odd)) throw DescriptorError(Clause::ChiEqualsChiStar);
  const CFun ev = even_combination(ctx, chi);
  CFun k(ctx.order()), l(ctx.order());
  for (int x = 0; x < ctx.order(); ++x) {
    k[x] = c1 * odd[x];
    l[x] = ev[x] + c2 * odd[x];
  }
  return {k, l};
}

struct ConditionWitness {
  bool ok = true;
  std::string detail;  // first violation, empty when ok
};

/// Condition (I): products up, pv, upv of p in P_chi with u,v outside I_chi
/// stay in P_chi, and rho transforms by rho(p)chi(u), rho(p)chi(v),
/// rho(p)chi(uv) respectively. rho is read off the supplied full-carrier
/// function at P_chi positions.
inline ConditionWitness check_condition_I(const Context& ctx, const ChiIdealStructure& st, const CFun& rho) {
  const ElementSet outside = st.i_chi.complement(ctx.order());
  for (int p : st.p_chi.to_vector())
    for (int u : outside.to_vector())
      for (int v : outside.to_vector()) {
        const int up = ctx.s.mul(u, p);
        const int pv = ctx.s.mul(p, v);
        const int upv = ctx.s.mul(up, v);
        const struct {
          int elem;
          Scalar expect;
          const char* tag;
        } cases[] = {
            {up, rho[p] * st.chi[u], "up"},
            {pv, rho[p] * st.chi[v], "pv"},
            {upv, rho[p] * st.chi[ctx.s.mul(u, v)], "upv"},
        };
        for (const auto& c : cases) {
          if (!st.p_chi.contains(c.elem))
            return {false, std::string(c.tag) + " leaves P_chi at (p,u,v)=(" + std::to_string(p) + "," +
                               std::to_string(u) + "," + std::to_string(v) + ")"};
          if (!(rho[c.elem] - c.expect).is_zero())
            return {false, std::string("rho(") + c.tag + ") mismatch at (p,u,v)=(" + std::to_string(p) +
                               "," + std::to_string(u) + "," + std::to_string(v) + ")"};
        }
      }
  return {};
}

/// Condition (II): k(xy) = k(yx) = 0 for x outside I_chi and y in I_chi\P_chi.
inline ConditionWitness check_condition_II(const Context& ctx, const CFun& k, const ChiIdealStructure& st) {
  const ElementSet outside = st.i_chi.complement(ctx.order());
  const ElementSet mid{st.i_chi.mask & ~st.p_chi.mask};
  for (int x : outside.to_vector())
    for (int y : mid.to_vector()) {
      if (!k[ctx.s.mul(x, y)].is_zero())
        return {false, "k(xy) != 0 at (x,y)=(" + std::to_string(x) + "," + std::to_string(y) + ")"};
      if (!k[ctx.s.mul(y, x)].is_zero())
        return {false, "k(yx) != 0 at (x,y)=(" + std::to_string(x) + "," + std::to_string(y) + ")"};
    }
  return {};
}

/// Family (3): piecewise k = chi A | 0 | rho and l = chi(1 + cA) | 0 | c rho
/// over the strata S\I_chi, I_chi\P_chi, P_chi. Requires chi* = chi, A odd
/// nonzero additive outside I_chi, rho odd on P_chi, conditions (I), (II),
/// and k abelian.
inline E2Solution gen_e2_family3(const Context& ctx, const CFun& chi, const CFun& a, const CFun& rho,
                                 const Scalar& c) {
  detail::require_multiplicative(ctx, chi);
  if (cfun_is_zero(chi)) throw DescriptorError(Clause::ChiIsZero);
  const CFun chistar = ctx.star_of(chi);
  for (int x = 0; x < ctx.order(); ++x)
    if (!(chistar[x] - chi[x]).is_zero()) throw DescriptorError(Clause::ChiNotSelfStar);

  const ChiIdealStructure st = chi_structure(ctx.s, chi);
  const ElementSet outside = st.i_chi.complement(ctx.order());

  CFun k(ctx.order()), l(ctx.order());
  for (int x = 0; x < ctx.order(); ++x) {
    if (outside.contains(x)) {
      k[x] = chi[x] * a[x];
      l[x] = chi[x] * (Scalar::one() + c * a[x]);
    } else if (st.p_chi.contains(x)) {
      k[x] = rho[x];
      l[x] = c * rho[x];
    }  // zero on I_chi \ P_chi
  }

  // rho and the side conditions only read the I_chi strata, so they are
  // checked before the additive degeneracy can short-circuit
  for (int p : st.p_chi.to_vector())
    if (!(ctx.mu.values[p] * k[ctx.sigma(p)] + k[p]).is_zero())
      throw DescriptorError(Clause::RhoNotOdd, "at p=" + std::to_string(p));

  if (const auto w = check_condition_I(ctx, st, k); !w.ok)
    throw DescriptorError(Clause::ConditionIViolated, w.detail);
  if (const auto w = check_condition_II(ctx, k, st); !w.ok)
    throw DescriptorError(Clause::ConditionIIViolated, w.detail);

  detail::require_valid_additive(ctx, outside, a);
  if (!is_abelian_fn(ctx.s, k)) throw DescriptorError(Clause::KNotAbelian);
  return {k, l};
}

/// Lemma: any E2 solution with k != 0 satisfies k(xy) = -k*(yx); if moreover
/// k = k*, then k vanishes on all triple products.
struct Lemma31Report {
  bool identity_ok = true;
  double identity_max_abs = 0.0;
  int worst_x = -1, worst_y = -1;
  bool k_is_even = false;
  bool triples_vanish = true;  // meaningful when k_is_even
};

inline Lemma31Report lemma31_checks(const Context& ctx, const CFun& k) {
  Lemma31Report rep;
  const int n = ctx.order();
  const CFun ks = ctx.star_of(k);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const Scalar r = k[ctx.s.mul(x, y)] + ks[ctx.s.mul(y, x)];
      if (!r.is_zero()) rep.identity_ok = false;
      const double a = r.abs();
      if (a > rep.identity_max_abs) {
        rep.identity_max_abs = a;
        rep.worst_x = x;
        rep.worst_y = y;
      }
    }
  rep.k_is_even = true;
  for (int x = 0; x < n; ++x) rep.k_is_even = rep.k_is_even && (k[x] - ks[x]).is_zero();
  if (rep.k_is_even) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (!k[ctx.s.mul(ctx.s.mul(x, y), z)].is_zero()) rep.triples_vanish = false;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// d'Alembert-type equation families
// ---------------------------------------------------------------------------

enum class E1Tag { G1, G2, G3, G4 };
enum class E2Tag { F1, F2, F3 };

inline const char* tag_name(E1Tag t) {
  switch (t) {
    case E1Tag::G1: return "G1";
    case E1Tag::G2: return "G2";
    case E1Tag::G3: return "G3";
    case E1Tag::G4: return "G4";
  }
  return "?";
}
inline const char* tag_name(E2Tag t) {
  switch (t) {
    case E2Tag::F1: return "F1";
    case E2Tag::F2: return "F2";
    case E2Tag::F3: return "F3";
  }
  return "?";
}

/// Exact descriptor of a d'Alembert-type solution family.
///   G1: f = theta, g = 0, h = free_fn
///   G2: f = theta, g = free_fn, h = 0
///   G3: f = theta + alpha (chi+chi*)/2 + beta (chi-chi*)/2,
///       g = beta (chi+chi*) + alpha (chi-chi*), h = (chi-chi*)/2
///       (canonical tensor factorization; (t g, h/t) is the same solution)
///   G4: f = theta + (alpha/2) chi A + (beta/4) chi A^2, g = alpha chi + beta chi A,
///       h = chi A outside I_chi; f = theta, g = h = 0 on I_chi
struct DescriptorE1 {
  E1Tag tag;
  CFun theta;
  CFun free_fn;  // G1 / G2
  CFun chi;      // G3 / G4
  Scalar alpha, beta;
  CFun a_fn;  // G4
};

inline E1Solution gen_e1_family(const Context& ctx, const DescriptorE1& d) {
  const int n = ctx.order();
  CFun theta = d.theta.empty() ? cfun_zero(n) : d.theta;
  if (!in_nullspace(ctx, theta)) throw DescriptorError(Clause::ThetaNotInNullspace);

  switch (d.tag) {
    case E1Tag::G1:
      return {theta, cfun_zero(n), d.free_fn.empty() ? cfun_const(n, Scalar::one()) : d.free_fn};
    case E1Tag::G2:
      return {theta, d.free_fn.empty() ? cfun_const(n, Scalar::one()) : d.free_fn, cfun_zero(n)};
    case E1Tag::G3: {
      detail::require_multiplicative(ctx, d.chi);
      if (d.alpha.is_zero() && d.beta.is_zero()) throw DescriptorError(Clause::AlphaBetaBothZero);
      const CFun odd = odd_combination(ctx, d.chi);
      if (cfun_is_zero(odd)) throw DescriptorError(Clause::ChiEqualsChiStar);
      const CFun ev = even_combination(ctx, d.chi);
      CFun f(n), g(n), h(n);
      const Scalar two = Scalar::from_int(2);
      for (int x = 0; x < n; ++x) {
        f[x] = theta[x] + d.alpha * ev[x] + d.beta * odd[x];
        g[x] = two * (d.beta * ev[x] + d.alpha * odd[x]);
        h[x] = odd[x];
      }
      return {f, g, h};
    }
    case E1Tag::G4: {
      detail::require_multiplicative(ctx, d.chi);
      if (cfun_is_zero(d.chi)) throw DescriptorError(Clause::ChiIsZero);
      if (d.alpha.is_zero() && d.beta.is_zero()) throw DescriptorError(Clause::AlphaBetaBothZero);
      const CFun chistar = ctx.star_of(d.chi);
      for (int x = 0; x < n; ++x)
        if (!(chistar[x] - d.chi[x]).is_zero()) throw DescriptorError(Clause::ChiNotSelfStar);
      const ChiIdealStructure st = chi_structure(ctx.s, d.chi);
      const ElementSet outside = st.i_chi.complement(n);
      detail::require_valid_additive(ctx, outside, d.a_fn);
      CFun f = theta, g = cfun_zero(n), h = cfun_zero(n);
      const Rat half(1, 2), quarter(1, 4);
      for (int x : outside.to_vector()) {
        const Scalar ca = d.chi[x] * d.a_fn[x];
        f[x] = theta[x] + (d.alpha * ca).scaled(half) + (d.beta * ca * d.a_fn[x]).scaled(quarter);
        g[x] = d.alpha * d.chi[x] + d.beta * ca;
        h[x] = ca;
      }
      return {f, g, h};
    }
  }
  throw std::logic_error("unreachable");
}

/// Dispatcher mirroring gen_e1_family for the mu-sine subtraction law.
struct DescriptorE2 {
  E2Tag tag;
  CFun k;    // F1
  Scalar c;  // F1 / F3
  CFun chi;  // F2 / F3
  Scalar c1, c2;
  CFun a_fn, rho;  // F3
};

inline E2Solution gen_e2_family(const Context& ctx, const DescriptorE2& d) {
  switch (d.tag) {
    case E2Tag::F1: return gen_e2_family1(ctx, d.k, d.c);
    case E2Tag::F2: return gen_e2_family2(ctx, d.chi, d.c1, d.c2);
    case E2Tag::F3: return gen_e2_family3(ctx, d.chi, d.a_fn, d.rho, d.c);
  }
  throw std::logic_error("unreachable");
}

}  // namespace feq
