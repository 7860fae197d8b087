// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exit code = number of failures.

#include <iostream>

#include "feq/sweep.hpp"
#include "feq/window.hpp"

using namespace feq;

namespace {

int failures = 0;

void crit(int num, const std::string& name, bool pass, const std::string& detail = "") {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << num << ": " << name
            << (detail.empty() ? "" : " (" + detail + ")") << std::endl;
  if (!pass) ++failures;
}

FiniteSemigroup mono3() {
  return FiniteSemigroup({{0, 1, 2}, {1, 2, 2}, {2, 2, 2}}, {"1", "p", "0"}, "mono3");
}

struct GridSweepResult {
  bool all_zero = true;
  bool lemma_identity_ok = true;
  bool forced_even_triples_ok = true;
  int contexts = 0;
  long long descriptors = 0;
};

// criteria 1 and 3(a,c): exact generator soundness and the lemma suite on
// every generated E2 solution, over all contexts of order <= 3
GridSweepResult run_grid_sweep() {
  GridSweepResult r;
  for (int n = 1; n <= 3; ++n)
    for (const auto& s : enumerate_small(n))
      for (const auto& sigma : enumerate_involutive_automorphisms(s))
        for (const auto& mu : enumerate_mu(s, sigma)) {
          const Context ctx(s, sigma, mu);
          const auto an = analyze_context(ctx);
          const auto grid = generated_grid_check(ctx, an);
          ++r.contexts;
          r.descriptors += grid.descriptors;
          r.all_zero = r.all_zero && grid.all_exact_zero;
          for (const auto& sol : grid.e2) {
            if (cfun_is_zero(sol.k)) continue;
            const auto lem = lemma31_checks(ctx, sol.k);
            r.lemma_identity_ok = r.lemma_identity_ok && lem.identity_ok;
            if (n == 3 && lem.k_is_even)
              r.forced_even_triples_ok = r.forced_even_triples_ok && lem.triples_vanish;
          }
        }
  return r;
}

}  // namespace

int main() {
  std::cout << "acceptance suite, artifact version " << "0.1.0" << std::endl;

  // ---- criteria 1 + 3(exact half) ----
  const GridSweepResult grid = run_grid_sweep();
  crit(1, "generator soundness: exact zero residuals over the parameter grid", grid.all_zero,
       std::to_string(grid.descriptors) + " descriptors over " + std::to_string(grid.contexts) +
           " contexts");

  // ---- criterion 2: oracle completeness at order <= 3 ----
  OracleConfig cfg;
  cfg.attempts = 200;
  cfg.seed = 42;
  cfg.tol_classify = 1e-8;
  const SweepReport sweep = completeness_sweep(3, cfg);
  crit(2, "completeness: every numeric solution on compatible contexts classified",
       sweep.unclassified_on_compatible == 0 && sweep.coverage_ok,
       std::to_string(sweep.total_contexts) + " contexts, " +
           std::to_string(sweep.compatible_contexts) + " compatible, coverage " +
           (sweep.coverage_ok ? "ok" : "INCOMPLETE"));

  // ---- criterion 3: lemma suite ----
  crit(3, "lemma: k(xy) = -k*(yx) exactly on generated, <= 1e-10 on numeric; even k kills triples",
       grid.lemma_identity_ok && grid.forced_even_triples_ok && sweep.lemma31_worst <= 1e-10 &&
           sweep.even_triples_worst <= 1e-10,
       "numeric worst " + std::to_string(sweep.lemma31_worst) + ", even-triples worst " +
           std::to_string(sweep.even_triples_worst));

  // ---- criterion 4: nullspace regression dims + theta shifts ----
  {
    const Context z2(FiniteSemigroup({{0, 1}, {1, 0}}), {{0, 1}},
                     {cfun_const(2, Scalar::one())});
    const Context z3(FiniteSemigroup({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}), {{0, 2, 1}},
                     {cfun_const(3, Scalar::one())});
    const bool dims = nullspace_basis(z2).size() == 2 && nullspace_basis(z3).size() == 1;

    DescriptorE1 d{E1Tag::G3};
    d.theta = cfun_zero(3);
    d.chi = {Scalar::one(), Scalar::root_of_unity(1, 3), Scalar::root_of_unity(2, 3)};
    d.alpha = Scalar::from_int(1);
    d.beta = Scalar::from_int(3);
    const E1Solution sol = gen_e1_family(z3, d);
    bool shifts = residual_e1(z3, sol.f, sol.g, sol.h).exact_zero;
    for (const auto& theta : nullspace_basis(z3)) {
      CFun f = sol.f;
      for (int x = 0; x < 3; ++x) f[x] += theta[x];
      shifts = shifts && residual_e1(z3, f, sol.g, sol.h).exact_zero;
    }
    crit(4, "nullspace: dim 2 on (Z2,id,1), dim 1 on (Z3,-x,1), theta shifts preserve solutions",
         dims && shifts);
  }

  // ---- criterion 5: ideal machinery ----
  {
    const auto m = mono3();
    const CFun chi = {Scalar::one(), Scalar::zero(), Scalar::zero()};
    const auto st = chi_structure(m, chi);
    const bool sets = st.i_chi == ElementSet::of({1, 2}) && st.i_chi_sq == ElementSet::of({2}) &&
                      st.p_chi == ElementSet::of({1});
    const auto rep = is_compatible(m);
    bool witness_ok = !rep.compatible && rep.prime_ideal_entries.size() == 1;
    if (witness_ok)
      for (const auto& [q, w] : rep.prime_ideal_entries[0].witnesses)
        if (q == 1) witness_ok = witness_ok && !w.has_value();

    bool groups_ok = true;
    const std::vector<FiniteSemigroup> groups = {
        FiniteSemigroup(std::vector<std::vector<int>>{{0}}),
        FiniteSemigroup({{0, 1}, {1, 0}}),
        FiniteSemigroup({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}),
        FiniteSemigroup({{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}}),
        FiniteSemigroup({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}),
    };
    for (const auto& g : groups) groups_ok = groups_ok && is_compatible(g).compatible;
    crit(5, "ideals: mono3 structure, witness q=p fails, every group compatible",
         sets && witness_ok && groups_ok);
  }

  // ---- criterion 6: window families ----
  {
    const auto lat = builtin_lattice2d(3);
    bool ok = audit_window(lat).all_ok();
    long long pairs = 0;
    for (const int c : {0, 3}) {
      const auto rep = verify_window(lat, WindowCheck::E2, window_family_f3(lat, Scalar::from_int(c)));
      ok = ok && rep.max_abs <= 1e-12;
      pairs = rep.pairs;
    }
    ok = ok && pairs == 49ll * 49ll;
    const auto g4 =
        verify_window(lat, WindowCheck::E1, window_family_g4(lat, Scalar::one(), Scalar::from_int(2)));
    ok = ok && g4.max_abs <= 1e-12;

    const auto line = builtin_line_with_inversion(5, 1, 3);
    ok = ok && audit_window(line).all_ok();
    const auto g3 =
        verify_window(line, WindowCheck::E1, window_family_g3(line, Scalar::zero(), Scalar::one()));
    ok = ok && g3.max_abs <= 1e-12;
    crit(6, "windows: F3 (c in {0,3}) and G4 on lattice2d(r=3), G3 on line(lambda=2pi/3, r=5)", ok,
         "all residuals <= 1e-12 over " + std::to_string(pairs) + " pairs");
  }

  // ---- criterion 7: finite additive degeneracy ----
  {
    bool empty_all = true;
    int carriers = 0;
    for (int n = 1; n <= 4; ++n)
      for (const auto& s : enumerate_small(n)) {
        ++carriers;
        empty_all = empty_all && enumerate_additive(s, ElementSet::full(n)).empty();
      }
    // the family-3 generator is therefore unreachable: its error path fires
    bool error_path = false;
    try {
      const Context ctx(mono3(), {{0, 1, 2}}, {cfun_const(3, Scalar::one())});
      gen_e2_family3(ctx, {Scalar::one(), Scalar::zero(), Scalar::zero()}, cfun_zero(3), cfun_zero(3),
                     Scalar::one());
    } catch (const DescriptorError& e) {
      error_path = e.clause == Clause::AIdenticallyZero;
    }
    crit(7, "finite carriers admit no nonzero additive functions; family-3 generator unreachable",
         empty_all && error_path, std::to_string(carriers) + " carriers of order <= 4");
  }

  // ---- criterion 8: Remark-3.5 probe on the non-compatible monoid ----
  {
    const auto m3 = mono3();
    const ContextOutcome* found = nullptr;
    for (const auto& c : sweep.contexts)
      if (c.table == m3.table() && c.sigma == std::vector<int>{0, 1, 2}) found = &c;
    const bool produced = found != nullptr && !found->compatible;
    // regression pin: the probe ran clean and the list computed empty
    const bool pinned = produced && found->e1.unclassified.empty() && found->e1.converged > 0;
    crit(8, "Remark-3.5 probe: unclassified list produced on mono3 and regression-pinned", pinned,
         produced ? ("unclassified entries: " + std::to_string(found->e1.unclassified.size()) +
                     ", rho evidence entries: " + std::to_string(sweep.rho_evidence.size()))
                  : "context missing from sweep");
  }

  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : std::to_string(failures) + " CRITERIA FAILED")
            << std::endl;
  return failures;
}
