// Command-line front end: enumeration, analysis, generation, verification,
// the numeric oracle sweep, and window-carrier checks, all over JSON files.
//
// Exit codes: 0 ok, 1 residual breach, 2 bad input, 3 bad descriptor,
// 4 completeness red flag (unclassified solution on a compatible carrier).

#include <CLI11.hpp>

#include <iostream>

#include "feq/manifest.hpp"
#include "feq/sweep.hpp"
#include "feq/window.hpp"

namespace {

using namespace feq;

struct CommonOpts {
  std::string json_out;
  double tol = 1e-8;
  uint64_t seed = 1;
  bool quiet = false;
};

void emit(const CommonOpts& opts, json report, RunManifest manifest, const WallTimer& timer,
          const std::string& summary) {
  manifest.timing_ms = timer.elapsed_ms();
  report["manifest"] = manifest.to_json();
  if (opts.json_out.empty())
    std::cout << report.dump(2) << "\n";
  else
    write_json_atomic(opts.json_out, report);
  if (!opts.quiet) std::cerr << summary << "\n";
}

int cmd_analyze(const CommonOpts& opts, const std::string& path) {
  WallTimer timer;
  RunManifest man{"analyze", {path}};
  const FiniteSemigroup s = semigroup_from_json(read_json_file(path));

  json report{{"schema", 1}, {"semigroup", semigroup_to_json(s)}};
  const auto autos = enumerate_involutive_automorphisms(s);
  json autos_j = json::array();
  for (const auto& a : autos) autos_j.push_back(a.perm);
  report["involutive_automorphisms"] = std::move(autos_j);

  const auto chars = enumerate_multiplicative(s);
  json chars_j = json::array();
  for (const auto& c : chars)
    chars_j.push_back(json{{"values", cfun_to_json(c.values)}, {"zero", c.is_identically_zero()}});
  report["characters"] = std::move(chars_j);

  json mus_j = json::array();
  for (size_t ai = 0; ai < autos.size(); ++ai)
    for (const auto& mu : enumerate_mu(s, autos[ai]))
      mus_j.push_back(json{{"sigma_index", ai}, {"mu", cfun_to_json(mu.values)}});
  report["mu_candidates"] = std::move(mus_j);

  json structs_j = json::array();
  for (size_t ci = 0; ci < chars.size(); ++ci) {
    if (chars[ci].is_identically_zero()) continue;
    json sj = chi_structure_to_json(chi_structure(s, chars[ci].values));
    sj["chi_index"] = ci;
    structs_j.push_back(std::move(sj));
  }
  report["chi_structures"] = std::move(structs_j);

  const auto compat = is_compatible(s);
  report["compatibility"] = compat_report_to_json(s, compat);

  emit(opts, std::move(report), std::move(man), timer,
       "analyze: order " + std::to_string(s.order()) + ", " + std::to_string(autos.size()) +
           " involutions, " + std::to_string(chars.size()) + " characters, compatible=" +
           (compat.compatible ? "true" : "false"));
  return 0;
}

int cmd_generate(const CommonOpts& opts, const std::string& ctx_path, const std::string& desc_path) {
  WallTimer timer;
  RunManifest man{"generate", {ctx_path, desc_path}};
  const Context ctx = context_from_json(read_json_file(ctx_path));
  const json dj = read_json_file(desc_path);
  const ParsedDescriptor d = descriptor_from_json(dj, ctx.order());

  json report{{"schema", 1}, {"family", dj.at("family")}};
  ResidualReport res;
  if (d.e1) {
    const E1Solution sol = gen_e1_family(ctx, *d.e1);
    res = residual_e1(ctx, sol.f, sol.g, sol.h);
    report["kind"] = "E1";
    report["f"] = cfun_to_json(sol.f);
    report["g"] = cfun_to_json(sol.g);
    report["h"] = cfun_to_json(sol.h);
  } else {
    const E2Solution sol = gen_e2_family(ctx, *d.e2);
    res = residual_e2(ctx, sol.k, sol.l);
    report["kind"] = "E2";
    report["k"] = cfun_to_json(sol.k);
    report["l"] = cfun_to_json(sol.l);
  }
  report["residual_certificate"] =
      json{{"max_abs", res.max_abs}, {"exact_zero", res.exact_zero}, {"worst", {res.worst_x, res.worst_y}}};

  emit(opts, std::move(report), std::move(man), timer,
       std::string("generate: residual ") + (res.exact_zero ? "exactly zero" : "nonzero"));
  return res.exact_zero ? 0 : 1;
}

int cmd_verify(const CommonOpts& opts, const std::string& ctx_path, const std::string& sol_path) {
  WallTimer timer;
  RunManifest man{"verify", {ctx_path, sol_path}};
  man.config = json{{"tol", opts.tol}};
  const Context ctx = context_from_json(read_json_file(ctx_path));
  const json sj = read_json_file(sol_path);
  const int n = ctx.order();

  json report{{"schema", 1}};
  double residual = 0.0;
  bool exact_zero = false;
  int wx = -1, wy = -1;
  bool is_e1 = sj.contains("f");

  const ContextAnalysis an = analyze_context(ctx);
  if (is_e1) {
    const ParsedFun f = fun_from_json(sj.at("f"), n), g = fun_from_json(sj.at("g"), n),
                    h = fun_from_json(sj.at("h"), n);
    if (f.exact && g.exact && h.exact) {
      const auto rep = residual_e1(ctx, *f.exact, *g.exact, *h.exact);
      residual = rep.max_abs;
      exact_zero = rep.exact_zero;
      wx = rep.worst_x;
      wy = rep.worst_y;
    } else {
      const auto rep = residual_e1_c(ctx, an.mu_c, f.values, g.values, h.values);
      residual = rep.max_abs;
      wx = rep.worst_x;
      wy = rep.worst_y;
    }
    report["kind"] = "E1";
    if (exact_zero || residual <= opts.tol) {
      std::string why;
      const auto cls = classify_solution(ctx, an, f.values, g.values, h.values, opts.tol, &why);
      if (cls) {
        json cj{{"family", tag_name(cls->tag)}, {"fit_defect", cls->fit_defect}};
        if (cls->chi_index >= 0) {
          cj["chi_index"] = cls->chi_index;
          cj["alpha"] = cx_to_json(cls->alpha);
          cj["beta"] = cx_to_json(cls->beta);
        }
        cj["theta"] = vecc_to_json(cls->theta);
        report["classification"] = std::move(cj);
      } else {
        report["classification"] = json{{"family", "unclassified"}, {"reason", why}};
      }
    }
  } else {
    const ParsedFun k = fun_from_json(sj.at("k"), n), l = fun_from_json(sj.at("l"), n);
    if (k.exact && l.exact) {
      const auto rep = residual_e2(ctx, *k.exact, *l.exact);
      residual = rep.max_abs;
      exact_zero = rep.exact_zero;
      wx = rep.worst_x;
      wy = rep.worst_y;
    } else {
      const auto rep = residual_e2_c(ctx, an.mu_c, k.values, l.values);
      residual = rep.max_abs;
      wx = rep.worst_x;
      wy = rep.worst_y;
    }
    report["kind"] = "E2";
    if (exact_zero || residual <= opts.tol) {
      if (max_abs(k.values) <= opts.tol) {
        report["classification"] = json{{"family", "zero_k"}};  // l arbitrary
      } else {
        std::string why;
        const auto cls = classify_e2(ctx, an, k.values, l.values, opts.tol, &why);
        if (cls) {
          json cj{{"family", tag_name(cls->tag)}};
          if (cls->chi_index >= 0) cj["chi_index"] = cls->chi_index;
          report["classification"] = std::move(cj);
        } else {
          report["classification"] = json{{"family", "unclassified"}, {"reason", why}};
        }
      }
    }
  }

  const bool ok = exact_zero || residual <= opts.tol;
  report["residual"] = json{{"max_abs", residual}, {"exact_zero", exact_zero}, {"worst", {wx, wy}}};
  report["verdict"] = ok ? "pass" : "fail";
  emit(opts, std::move(report), std::move(man), timer,
       "verify: residual " + std::to_string(residual) + (ok ? " (pass)" : " (FAIL)") +
           (ok ? "" : " worst pair (" + std::to_string(wx) + "," + std::to_string(wy) + ")"));
  return ok ? 0 : 1;
}

int cmd_solve_null(const CommonOpts& opts, const std::string& ctx_path) {
  WallTimer timer;
  RunManifest man{"solve-null", {ctx_path}};
  const Context ctx = context_from_json(read_json_file(ctx_path));
  const auto basis = nullspace_basis(ctx);
  json bj = json::array();
  for (const auto& b : basis) bj.push_back(cfun_to_json(b));
  json report{{"schema", 1}, {"dimension", basis.size()}, {"basis", std::move(bj)}};
  emit(opts, std::move(report), std::move(man), timer,
       "solve-null: dimension " + std::to_string(basis.size()));
  return 0;
}

int cmd_oracle(const CommonOpts& opts, int order, int attempts, bool allow_slow) {
  WallTimer timer;
  if (order < 1 || order > 4 || (order == 4 && !allow_slow))
    throw BadInputError("oracle supports order <= 3 (4 with --allow-slow)");
  OracleConfig cfg;
  cfg.attempts = attempts;
  cfg.seed = opts.seed;
  cfg.tol_classify = opts.tol;
  RunManifest man{"oracle", {}};
  man.seed = opts.seed;
  man.config = cfg.to_json();
  man.config["order"] = order;

  const SweepReport rep = completeness_sweep(order, cfg);
  const int red_flags = rep.unclassified_on_compatible;
  emit(opts, rep.to_json(), std::move(man), timer,
       "oracle: " + std::to_string(rep.total_contexts) + " contexts (" +
           std::to_string(rep.compatible_contexts) + " compatible), unclassified-on-compatible " +
           std::to_string(red_flags) + ", grid " + (rep.grid_all_zero ? "all-zero" : "FAILED") +
           ", lemma31 worst " + std::to_string(rep.lemma31_worst));
  return red_flags == 0 ? 0 : 4;
}

int cmd_enumerate(const CommonOpts& opts, int order, bool canonical) {
  WallTimer timer;
  RunManifest man{"enumerate", {}};
  man.config = json{{"order", order}, {"canonical", canonical}};
  json list = json::array();
  enumerate_small(order, canonical, [&](const FiniteSemigroup& s) {
    list.push_back(semigroup_to_json(s));
    return true;
  });
  const size_t count = list.size();
  json report{{"schema", 1}, {"order", order}, {"canonical", canonical}, {"count", count},
              {"semigroups", std::move(list)}};
  emit(opts, std::move(report), std::move(man), timer,
       "enumerate: " + std::to_string(count) + " tables of order " + std::to_string(order));
  return 0;
}

int cmd_window(const CommonOpts& opts, const std::string& builtin, long long radius,
               const std::string& lambda, const std::string& fam, const std::string& c_str,
               const std::string& alpha_str, const std::string& beta_str, double tol) {
  WallTimer timer;
  RunManifest man{"window", {}};
  man.config = json{{"builtin", builtin}, {"radius", radius}, {"case", fam},
                    {"lambda", lambda},   {"c", c_str},       {"alpha", alpha_str},
                    {"beta", beta_str},   {"tol", tol}};

  WindowCarrier w;
  if (builtin == "lattice2d") {
    w = builtin_lattice2d(radius);
  } else if (builtin == "line") {
    const Frac lam = frac_from_string(lambda);
    w = builtin_line_with_inversion(radius, lam.num, lam.den);
  } else {
    throw BadInputError("unknown builtin: " + builtin + " (expected lattice2d or line)");
  }

  const WindowAudit audit = audit_window(w);
  if (!audit.all_ok()) throw std::runtime_error("window audit failed for builtin " + builtin);

  const Scalar c = Scalar::rational(rat_from_string(c_str));
  const Scalar alpha = Scalar::rational(rat_from_string(alpha_str));
  const Scalar beta = Scalar::rational(rat_from_string(beta_str));

  WindowPayload payload;
  WindowCheck check;
  if (fam == "F3") {
    payload = window_family_f3(w, c);
    check = WindowCheck::E2;
  } else if (fam == "G3") {
    payload = window_family_g3(w, alpha, beta);
    check = WindowCheck::E1;
  } else if (fam == "G4") {
    payload = window_family_g4(w, alpha, beta);
    check = WindowCheck::E1;
  } else {
    throw BadInputError("unknown window case: " + fam + " (expected F3, G3 or G4)");
  }

  const WindowReport rep = verify_window(w, check, payload);
  const bool ok = rep.max_abs <= tol;
  json report{{"schema", 1},
              {"builtin", builtin},
              {"radius", radius},
              {"case", fam},
              {"pairs", rep.pairs},
              {"max_residual", rep.max_abs},
              {"exact_zero", rep.exact_zero},
              {"worst", {w.elem_str(rep.worst_x), w.elem_str(rep.worst_y)}},
              {"verdict", ok ? "pass" : "fail"}};
  emit(opts, std::move(report), std::move(man), timer,
       "window " + builtin + " " + fam + ": max residual " + std::to_string(rep.max_abs) +
           (ok ? " (pass)" : " (FAIL)"));
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mu-sine subtraction and d'Alembert-type functional equations on finite semigroups"};
  app.require_subcommand(1);

  CommonOpts opts;
  app.add_option("--json-out", opts.json_out, "write the JSON report to this file (default: stdout)");
  app.add_option("--tol", opts.tol, "verification/classification tolerance")->capture_default_str();
  app.add_option("--seed", opts.seed, "PRNG seed for the oracle")->capture_default_str();
  app.add_flag("--quiet", opts.quiet, "suppress the human-readable summary");

  std::string in_a, in_b;
  auto* analyze = app.add_subcommand("analyze", "automorphisms, characters, mu, ideals, compatibility");
  analyze->fallthrough();
  analyze->add_option("semigroup", in_a, "semigroup JSON file")->required();

  auto* generate = app.add_subcommand("generate", "construct a solution from a family descriptor");
  generate->fallthrough();
  generate->add_option("context", in_a)->required();
  generate->add_option("descriptor", in_b)->required();

  auto* verify = app.add_subcommand("verify", "residual check + classification of a solution file");
  verify->fallthrough();
  verify->add_option("context", in_a)->required();
  verify->add_option("solution", in_b)->required();

  auto* solvenull = app.add_subcommand("solve-null", "exact basis of the nullspace N_mu(sigma,S)");
  solvenull->fallthrough();
  solvenull->add_option("context", in_a)->required();

  int order = 2, attempts = 200;
  bool allow_slow = false, canonical = false;
  auto* oracle = app.add_subcommand("oracle", "numeric completeness sweep over all small contexts");
  oracle->fallthrough();
  oracle->add_option("--order", order, "max carrier order")->required();
  oracle->add_option("--attempts", attempts, "random restarts per context")->capture_default_str();
  oracle->add_flag("--allow-slow", allow_slow, "permit order 4");

  auto* enumerate = app.add_subcommand("enumerate", "list all semigroup tables of one order");
  enumerate->fallthrough();
  enumerate->add_option("--order", order)->required();
  enumerate->add_flag("--canonical", canonical, "dedup up to isomorphism/anti-isomorphism");

  std::string builtin = "lattice2d", lambda = "1/3", fam = "F3";
  std::string c_str = "0", alpha_str = "1", beta_str = "2";
  long long radius = 3;
  double wtol = 1e-12;
  auto* window = app.add_subcommand("window", "closed-form infinite-carrier checks on a finite window");
  window->fallthrough();
  window->add_option("--builtin", builtin, "lattice2d | line")->capture_default_str();
  window->add_option("--radius", radius)->capture_default_str();
  window->add_option("--lambda", lambda, "chi exponent as a fraction of 2*pi (line builtin)")
      ->capture_default_str();
  window->add_option("--case", fam, "F3 | G3 | G4")->capture_default_str();
  window->add_option("--c", c_str, "F3 constant (rational)")->capture_default_str();
  window->add_option("--alpha", alpha_str, "rational alpha")->capture_default_str();
  window->add_option("--beta", beta_str, "rational beta")->capture_default_str();
  window->add_option("--wtol", wtol, "window residual tolerance")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return cmd_analyze(opts, in_a);
    if (*generate) return cmd_generate(opts, in_a, in_b);
    if (*verify) return cmd_verify(opts, in_a, in_b);
    if (*solvenull) return cmd_solve_null(opts, in_a);
    if (*oracle) return cmd_oracle(opts, order, attempts, allow_slow);
    if (*enumerate) return cmd_enumerate(opts, order, canonical);
    if (*window)
      return cmd_window(opts, builtin, radius, lambda, fam, c_str, alpha_str, beta_str, wtol);
  } catch (const feq::DescriptorError& e) {
    std::cerr << "descriptor error: " << e.what() << "\n";
    return 3;
  } catch (const feq::NonAssociativeError& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return 2;
  } catch (const feq::BadInputError& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
