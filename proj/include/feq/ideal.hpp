#pragma once

#include <optional>

#include "feq/morphism.hpp"

namespace feq {

struct ChiIsZeroError : std::invalid_argument {
  ChiIsZeroError() : std::invalid_argument("chi must be a non-zero multiplicative function") {}
};

/// Zero-set machinery of a non-zero multiplicative function:
/// I = {x : chi(x) = 0}, its square, the difference I \ I^2, and
/// P = {p in I \ I^2 : up, pv, upv stay in I \ I^2 for all u,v outside I}.
struct ChiIdealStructure {
  CFun chi;
  ElementSet i_chi;
  ElementSet i_chi_sq;
  ElementSet i_minus_sq;
  ElementSet p_chi;
};

inline ChiIdealStructure chi_structure(const FiniteSemigroup& s, const CFun& chi) {
  if (cfun_is_zero(chi)) throw ChiIsZeroError();
  ChiIdealStructure st;
  st.chi = chi;
  for (int x = 0; x < s.order(); ++x)
    if (chi[x].is_zero()) st.i_chi.insert(x);
  st.i_chi_sq = product_set(s, st.i_chi, st.i_chi);
  st.i_minus_sq = ElementSet{st.i_chi.mask & ~st.i_chi_sq.mask};

  const ElementSet outside = st.i_chi.complement(s.order());
  for (int p = 0; p < s.order(); ++p) {
    if (!st.i_minus_sq.contains(p)) continue;
    bool ok = true;
    for (int u = 0; u < s.order() && ok; ++u) {
      if (!outside.contains(u)) continue;
      for (int v = 0; v < s.order() && ok; ++v) {
        if (!outside.contains(v)) continue;
        ok = st.i_minus_sq.contains(s.mul(u, p)) && st.i_minus_sq.contains(s.mul(p, v)) &&
             st.i_minus_sq.contains(s.mul(s.mul(u, p), v));
      }
    }
    if (ok) st.p_chi.insert(p);
  }
  return st;
}

/// Per-ideal witness table for the compatibility condition: for each q in a
/// prime ideal I, a w outside I with q*w in I^2, or nothing if no such w
/// exists. Failures stay auditable rather than collapsing into a boolean.
struct CompatibilityReport {
  bool s2_equals_s = false;
  struct IdealEntry {
    ElementSet ideal;
    std::vector<std::pair<int, std::optional<int>>> witnesses;  // (q, w or nullopt)
    bool satisfied = true;
  };
  std::vector<IdealEntry> prime_ideal_entries;
  bool compatible = false;
};

inline CompatibilityReport is_compatible(const FiniteSemigroup& s) {
  CompatibilityReport rep;
  rep.s2_equals_s = squared_set(s) == s.all();
  bool all_ok = true;
  for (const auto& ideal : prime_ideals(s)) {
    CompatibilityReport::IdealEntry entry;
    entry.ideal = ideal;
    const ElementSet sq = product_set(s, ideal, ideal);
    const ElementSet outside = ideal.complement(s.order());
    for (int q : ideal.to_vector()) {
      std::optional<int> found;
      for (int w : outside.to_vector())
        if (sq.contains(s.mul(q, w))) {
          found = w;
          break;
        }
      if (!found) entry.satisfied = false;
      entry.witnesses.emplace_back(q, found);
    }
    all_ok = all_ok && entry.satisfied;
    rep.prime_ideal_entries.push_back(std::move(entry));
  }
  rep.compatible = rep.s2_equals_s && all_ok;
  return rep;
}

}  // namespace feq
