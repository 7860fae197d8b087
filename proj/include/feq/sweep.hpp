#pragma once

#include "feq/enumerate.hpp"
#include "feq/oracle.hpp"

namespace feq {

namespace detail {

inline double lemma31_defect_c(const Context& ctx, const VecC& mu, const VecC& k) {
  double worst = 0.0;
  const int n = ctx.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int w = ctx.s.mul(y, x);
      worst = std::max(worst, std::abs(k[ctx.s.mul(x, y)] + mu[w] * k[ctx.sigma(w)]));
    }
  return worst;
}

// for numerically even k (k close to k*), the lemma forces k to vanish on
// triple products; returns the worst |k(xyz)| if even, else 0
inline double lemma31_even_triples_c(const Context& ctx, const VecC& mu, const VecC& k, double tol) {
  const int n = ctx.order();
  double even_defect = 0.0;
  for (int x = 0; x < n; ++x)
    even_defect = std::max(even_defect, std::abs(k[x] - mu[x] * k[ctx.sigma(x)]));
  if (even_defect > tol) return 0.0;
  double worst = 0.0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        worst = std::max(worst, std::abs(k[ctx.s.mul(ctx.s.mul(x, y), z)]));
  return worst;
}

// Gram-Schmidt projection of f onto the orthogonal complement of the
// nullspace embedding, for raw-distance dedup of unclassified solutions.
inline VecC project_out_nullspace(const std::vector<VecC>& basis, VecC f) {
  std::vector<VecC> ortho;
  for (VecC b : basis) {
    for (const auto& o : ortho) {
      Cx dot{};
      double nn = 0.0;
      for (size_t i = 0; i < b.size(); ++i) {
        dot += std::conj(o[i]) * b[i];
        nn += std::norm(o[i]);
      }
      if (nn > 0) {
        for (size_t i = 0; i < b.size(); ++i) b[i] -= dot / nn * o[i];
      }
    }
    if (max_abs(b) > 1e-9) ortho.push_back(std::move(b));
  }
  for (const auto& o : ortho) {
    Cx dot{};
    double nn = 0.0;
    for (size_t i = 0; i < f.size(); ++i) {
      dot += std::conj(o[i]) * f[i];
      nn += std::norm(o[i]);
    }
    for (size_t i = 0; i < f.size(); ++i) f[i] -= dot / nn * o[i];
  }
  return f;
}

inline double vec_dist(const VecC& a, const VecC& b) {
  double m = 0.0;
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace detail

/// Per-context result of the oracle sweep.
struct ContextOutcome {
  std::vector<std::vector<int>> table;
  std::vector<int> sigma;
  std::vector<std::string> mu_values;
  bool compatible = false;

  int grid_descriptors = 0;
  bool grid_all_exact_zero = true;
  std::string grid_failure;

  struct E1Side {
    int converged = 0;
    std::map<std::string, int> tag_counts;
    std::vector<std::string> strata;
    std::vector<NumericE1Solution> unclassified;
    bool covers_generated = true;
  } e1;

  struct E2Side {
    int converged = 0;
    std::map<std::string, int> tag_counts;
    std::vector<std::string> strata;
    std::vector<NumericE2Solution> unclassified;
    bool covers_generated = true;
    double lemma31_worst = 0.0;
    double even_triples_worst = 0.0;
    json rho_candidates = json::array();
  } e2;
};

struct SweepReport {
  int max_order = 0;
  OracleConfig cfg;
  std::vector<ContextOutcome> contexts;

  int total_contexts = 0;
  int compatible_contexts = 0;
  int unclassified_on_compatible = 0;
  int unclassified_on_noncompatible = 0;
  bool grid_all_zero = true;
  double lemma31_worst = 0.0;
  double even_triples_worst = 0.0;
  bool coverage_ok = true;
  json rho_evidence = json::array();

  json to_json() const {
    json ctxs = json::array();
    for (const auto& c : contexts) {
      json e1u = json::array();
      for (const auto& u : c.e1.unclassified)
        e1u.push_back(json{{"f", vecc_to_json(u.f)},
                           {"g", vecc_to_json(u.g)},
                           {"h", vecc_to_json(u.h)},
                           {"residual", u.residual}});
      json e2u = json::array();
      for (const auto& u : c.e2.unclassified)
        e2u.push_back(json{{"k", vecc_to_json(u.k)}, {"l", vecc_to_json(u.l)}, {"residual", u.residual}});
      ctxs.push_back(json{
          {"table", c.table},
          {"sigma", c.sigma},
          {"mu", c.mu_values},
          {"compatible", c.compatible},
          {"grid", json{{"descriptors", c.grid_descriptors},
                        {"all_exact_zero", c.grid_all_exact_zero},
                        {"first_failure", c.grid_failure}}},
          {"e1", json{{"converged", c.e1.converged},
                      {"tags", c.e1.tag_counts},
                      {"strata", c.e1.strata},
                      {"unclassified", std::move(e1u)},
                      {"covers_generated", c.e1.covers_generated},
                      {"symbolic_strata", json::array({"G2 (h = 0, g arbitrary, f in nullspace)"})}}},
          {"e2", json{{"converged", c.e2.converged},
                      {"tags", c.e2.tag_counts},
                      {"strata", c.e2.strata},
                      {"unclassified", std::move(e2u)},
                      {"covers_generated", c.e2.covers_generated},
                      {"lemma31_worst", c.e2.lemma31_worst},
                      {"even_triples_worst", c.e2.even_triples_worst},
                      {"rho_candidates", c.e2.rho_candidates},
                      {"symbolic_strata", json::array({"k = 0 (l arbitrary)"})}}},
      });
    }
    return json{{"schema", 1},
                {"max_order", max_order},
                {"config", cfg.to_json()},
                {"contexts", std::move(ctxs)},
                {"summary", json{{"total_contexts", total_contexts},
                                 {"compatible_contexts", compatible_contexts},
                                 {"unclassified_on_compatible", unclassified_on_compatible},
                                 {"unclassified_on_noncompatible", unclassified_on_noncompatible},
                                 {"grid_all_zero", grid_all_zero},
                                 {"lemma31_worst", lemma31_worst},
                                 {"even_triples_worst", even_triples_worst},
                                 {"coverage_ok", coverage_ok},
                                 {"rho_evidence", rho_evidence}}}};
  }
};

/// Runs one context of the sweep: the exact grid check, both numeric solvers
/// seeded with the generated solutions, classification, lemma checks and the
/// rho-support scan.
inline ContextOutcome sweep_context(const Context& ctx, const OracleConfig& cfg) {
  ContextOutcome out;
  out.table = ctx.s.table();
  out.sigma = ctx.sigma.perm;
  for (const auto& v : ctx.mu.values) out.mu_values.push_back(v.str());
  out.compatible = is_compatible(ctx.s).compatible;

  const ContextAnalysis an = analyze_context(ctx);
  const GridCheck grid = generated_grid_check(ctx, an);
  out.grid_descriptors = grid.descriptors;
  out.grid_all_exact_zero = grid.all_exact_zero;
  out.grid_failure = grid.first_failure;

  const auto canon_chi = [&](int ci) { return std::min(ci, an.star_index[ci]); };

  // --- E1 ---
  const auto e1_sols = solve_e1_numeric(ctx, cfg, grid.e1);
  out.e1.converged = static_cast<int>(e1_sols.size());
  std::vector<VecC> seen_unclassified_f;
  for (const auto& sol : e1_sols) {
    std::string why;
    const auto cls = classify_solution(ctx, an, sol.f, sol.g, sol.h, cfg.tol_classify, &why);
    std::string key;
    if (cls) {
      key = tag_name(cls->tag);
      if (cls->chi_index >= 0) key += "#" + std::to_string(canon_chi(cls->chi_index));
    } else {
      key = "unclassified";
      // raw-distance dedup after projecting out the nullspace component of f
      VecC fp = detail::project_out_nullspace(an.null_basis_c, sol.f);
      bool dup = false;
      for (const auto& prev : seen_unclassified_f) dup = dup || detail::vec_dist(prev, fp) < cfg.tol_dedup;
      if (!dup) {
        seen_unclassified_f.push_back(std::move(fp));
        out.e1.unclassified.push_back(sol);
      }
    }
    ++out.e1.tag_counts[key];
    if (key != "unclassified" &&
        std::find(out.e1.strata.begin(), out.e1.strata.end(), key) == out.e1.strata.end())
      out.e1.strata.push_back(key);
  }
  // numeric coverage of the generated strata (G2 is pinned away by the anchor
  // h(a) = 1 and is reported symbolically instead)
  for (const auto& key : grid.e1_keys)
    if (key != "G2" &&
        std::find(out.e1.strata.begin(), out.e1.strata.end(), key) == out.e1.strata.end())
      out.e1.covers_generated = false;

  // --- E2 ---
  const auto e2_sols = solve_e2_numeric(ctx, cfg, grid.e2);
  out.e2.converged = static_cast<int>(e2_sols.size());
  std::vector<VecC> seen_unclassified_k;
  for (const auto& sol : e2_sols) {
    std::string why;
    const auto cls = classify_e2(ctx, an, sol.k, sol.l, cfg.tol_classify, &why);
    std::string key;
    if (cls) {
      key = tag_name(cls->tag);
      if (cls->chi_index >= 0) key += "#" + std::to_string(canon_chi(cls->chi_index));
    } else {
      key = "unclassified";
      bool dup = false;
      for (const auto& prev : seen_unclassified_k) dup = dup || detail::vec_dist(prev, sol.k) < cfg.tol_dedup;
      if (!dup) {
        seen_unclassified_k.push_back(sol.k);
        out.e2.unclassified.push_back(sol);
      }
    }
    ++out.e2.tag_counts[key];
    if (key != "unclassified" &&
        std::find(out.e2.strata.begin(), out.e2.strata.end(), key) == out.e2.strata.end())
      out.e2.strata.push_back(key);

    out.e2.lemma31_worst = std::max(out.e2.lemma31_worst, detail::lemma31_defect_c(ctx, an.mu_c, sol.k));
    out.e2.even_triples_worst = std::max(
        out.e2.even_triples_worst, detail::lemma31_even_triples_c(ctx, an.mu_c, sol.k, cfg.tol_classify));

    // rho-support scan: a verified solution carried by P_chi while vanishing
    // off I_chi would witness rho != 0 (open in the source material)
    for (int ci : an.nonzero_chi) {
      const auto& st = an.structures[ci];
      if (st.p_chi.is_empty()) continue;
      double on_p = 0.0, outside = 0.0;
      for (int x : st.p_chi.to_vector()) on_p = std::max(on_p, std::abs(sol.k[x]));
      for (int x : st.i_chi.complement(ctx.order()).to_vector())
        outside = std::max(outside, std::abs(sol.k[x]));
      if (on_p > cfg.tol_classify && outside <= cfg.tol_classify)
        out.e2.rho_candidates.push_back(json{{"chi", ci}, {"max_on_p_chi", on_p}, {"max_off_i_chi", outside}});
    }
  }
  for (const auto& key : grid.e2_keys)
    if (std::find(out.e2.strata.begin(), out.e2.strata.end(), key) == out.e2.strata.end())
      out.e2.covers_generated = false;

  return out;
}

/// Every semigroup of order <= max_order x every involutive sigma x every
/// admissible mu: grid soundness, numeric completeness, lemma checks, and the
/// Remark-3.5 evidence collection.
inline SweepReport completeness_sweep(int max_order, const OracleConfig& cfg) {
  SweepReport rep;
  rep.max_order = max_order;
  rep.cfg = cfg;
  for (int n = 1; n <= max_order; ++n) {
    for (const auto& s : enumerate_small(n)) {
      for (const auto& sigma : enumerate_involutive_automorphisms(s)) {
        for (const auto& mu : enumerate_mu(s, sigma)) {
          Context ctx(s, sigma, mu);
          OracleConfig local = cfg;
          // derive a per-context seed so contexts stay independent but reproducible
          local.seed = cfg.seed * 1000003ull + rep.total_contexts;
          ContextOutcome out = sweep_context(ctx, local);
          ++rep.total_contexts;
          if (out.compatible) {
            ++rep.compatible_contexts;
            rep.unclassified_on_compatible += static_cast<int>(out.e1.unclassified.size());
          } else {
            rep.unclassified_on_noncompatible += static_cast<int>(out.e1.unclassified.size());
          }
          rep.grid_all_zero = rep.grid_all_zero && out.grid_all_exact_zero;
          rep.lemma31_worst = std::max(rep.lemma31_worst, out.e2.lemma31_worst);
          rep.even_triples_worst = std::max(rep.even_triples_worst, out.e2.even_triples_worst);
          rep.coverage_ok = rep.coverage_ok && out.e1.covers_generated && out.e2.covers_generated;
          for (const auto& rc : out.e2.rho_candidates) {
            json e = rc;
            e["context_index"] = rep.total_contexts - 1;
            rep.rho_evidence.push_back(std::move(e));
          }
          rep.contexts.push_back(std::move(out));
        }
      }
    }
  }
  return rep;
}

}  // namespace feq
