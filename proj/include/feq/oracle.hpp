#pragma once

#include <Eigen/Dense>
#include <map>
#include <random>

#include "feq/json_io.hpp"

#if defined(__SIZEOF_FLOAT128__) && !defined(FEQ_NO_QUADMATH)
#include <quadmath.h>
#define FEQ_HAVE_QUAD 1
#endif

namespace feq {

struct OracleConfig {
  int attempts = 200;           // random restarts per context (split across anchors)
  double tol_converge = 1e-10;  // accepted residual after re-verification
  double tol_classify = 1e-8;
  double tol_dedup = 1e-6;
  uint64_t seed = 1;
  int max_newton_iter = 50;

  json to_json() const {
    return json{{"attempts", attempts},   {"tol_converge", tol_converge},
                {"tol_classify", tol_classify}, {"tol_dedup", tol_dedup},
                {"seed", seed},           {"max_newton_iter", max_newton_iter}};
  }
};

namespace detail {

// ---- high-precision residual re-verification ----

#ifdef FEQ_HAVE_QUAD
using quad = __float128;
inline quad quad_cos(quad a) { return cosq(a); }
inline quad quad_sin(quad a) { return sinq(a); }
inline quad quad_pi() { return M_PIq; }
#else
using quad = long double;
inline quad quad_cos(quad a) { return std::cos(a); }
inline quad quad_sin(quad a) { return std::sin(a); }
inline quad quad_pi() { return 3.141592653589793238462643383279502884L; }
#endif

struct QC {
  quad re = 0, im = 0;
  friend QC operator+(QC a, QC b) { return {a.re + b.re, a.im + b.im}; }
  friend QC operator-(QC a, QC b) { return {a.re - b.re, a.im - b.im}; }
  friend QC operator*(QC a, QC b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
  double abs2_as_double() const { return static_cast<double>(re * re + im * im); }
};

inline QC qc_of(const Cx& z) { return {static_cast<quad>(z.real()), static_cast<quad>(z.imag())}; }

inline QC qc_of_scalar(const Scalar& s) {
  QC z;
  for (const auto& t : s.terms()) {
    const quad coef = static_cast<quad>(numerator(t.coef).convert_to<long double>()) /
                      static_cast<quad>(denominator(t.coef).convert_to<long double>());
    const quad ang = 2 * quad_pi() * static_cast<quad>(t.exp.num) / static_cast<quad>(t.exp.den);
    z = z + QC{coef * quad_cos(ang), coef * quad_sin(ang)};
  }
  return z;
}

inline std::vector<QC> qc_embed(const CFun& f) {
  std::vector<QC> v(f.size());
  for (size_t i = 0; i < f.size(); ++i) v[i] = qc_of_scalar(f[i]);
  return v;
}
inline std::vector<QC> qc_embed(const VecC& f) {
  std::vector<QC> v(f.size());
  for (size_t i = 0; i < f.size(); ++i) v[i] = qc_of(f[i]);
  return v;
}

inline double residual_e2_quad(const Context& ctx, const VecC& k, const VecC& l) {
  const auto mu = qc_embed(ctx.mu.values);
  const auto kq = qc_embed(k), lq = qc_embed(l);
  double worst = 0.0;
  for (int x = 0; x < ctx.order(); ++x)
    for (int y = 0; y < ctx.order(); ++y) {
      const QC r = mu[y] * kq[ctx.s.mul(x, ctx.sigma(y))] - kq[x] * lq[y] + kq[y] * lq[x];
      worst = std::max(worst, std::sqrt(r.abs2_as_double()));
    }
  return worst;
}

inline double residual_e1_quad(const Context& ctx, const VecC& f, const VecC& g, const VecC& h) {
  const auto mu = qc_embed(ctx.mu.values);
  const auto fq = qc_embed(f), gq = qc_embed(g), hq = qc_embed(h);
  double worst = 0.0;
  for (int x = 0; x < ctx.order(); ++x)
    for (int y = 0; y < ctx.order(); ++y) {
      const QC r = fq[ctx.s.mul(x, y)] - mu[y] * fq[ctx.s.mul(ctx.sigma(y), x)] - gq[x] * hq[y];
      worst = std::max(worst, std::sqrt(r.abs2_as_double()));
    }
  return worst;
}

// ---- damped Gauss-Newton on a holomorphic square/overdetermined system ----

inline double max_abs_eigen(const Eigen::VectorXcd& v) {
  double m = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) m = std::max(m, std::abs(v(i)));
  return m;
}

template <class FFn, class JFn>
bool gauss_newton(FFn&& feval, JFn&& jeval, Eigen::VectorXcd& z, double tol, int maxit) {
  Eigen::VectorXcd F = feval(z);
  double fn = F.norm();
  for (int it = 0; it < maxit; ++it) {
    if (max_abs_eigen(F) <= tol * 1e-2) break;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(jeval(z), Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(1e-10);
    const Eigen::VectorXcd step = svd.solve(-F);
    if (!step.allFinite()) return false;
    bool accepted = false;
    double t = 1.0;
    for (int bt = 0; bt < 20; ++bt, t *= 0.5) {
      Eigen::VectorXcd z2 = z + t * step;
      Eigen::VectorXcd F2 = feval(z2);
      const double fn2 = F2.norm();
      if (fn2 < fn) {
        z = std::move(z2);
        F = std::move(F2);
        fn = fn2;
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
  }
  return max_abs_eigen(F) <= tol;
}

inline Eigen::VectorXcd random_start(std::mt19937_64& rng, int m, double scale) {
  std::normal_distribution<double> d(0.0, 1.0);
  Eigen::VectorXcd z(m);
  for (int i = 0; i < m; ++i) z(i) = scale * Cx(d(rng), d(rng));
  return z;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// grid of generated family solutions (exact)
// ---------------------------------------------------------------------------

inline std::vector<Scalar> parameter_grid() {
  return {Scalar::from_int(-2), Scalar::from_int(-1), Scalar::from_int(1), Scalar::from_int(3)};
}

struct GridCheck {
  int descriptors = 0;
  bool all_exact_zero = true;
  std::string first_failure;

  std::vector<E1Solution> e1;  // every generated solution, for seeding/lemma use
  std::vector<E2Solution> e2;
  std::vector<std::string> e1_keys, e2_keys;  // stratum key per generated solution
};

/// Generates every valid descriptor over the fixed parameter grid and checks
/// the residual is exactly zero. Returns the solution list for reuse as
/// Newton seeds and in the lemma suite.
inline GridCheck generated_grid_check(const Context& ctx, const ContextAnalysis& an) {
  GridCheck out;
  const int n = ctx.order();
  const auto grid = parameter_grid();

  const auto note_e2 = [&](const E2Solution& sol, const std::string& key) {
    ++out.descriptors;
    const auto rep = residual_e2(ctx, sol.k, sol.l);
    if (!rep.exact_zero && out.all_exact_zero) {
      out.all_exact_zero = false;
      out.first_failure = key;
    }
    out.e2.push_back(sol);
    out.e2_keys.push_back(key);
  };
  const auto note_e1 = [&](const E1Solution& sol, const std::string& key) {
    ++out.descriptors;
    const auto rep = residual_e1(ctx, sol.f, sol.g, sol.h);
    if (!rep.exact_zero && out.all_exact_zero) {
      out.all_exact_zero = false;
      out.first_failure = key;
    }
    out.e1.push_back(sol);
    out.e1_keys.push_back(key);
  };

  // F1: indicators outside S^2, when S^2 is proper
  const ElementSet sq = squared_set(ctx.s);
  if (sq != ctx.s.all()) {
    for (int e = 0; e < n; ++e) {
      if (sq.contains(e)) continue;
      for (const auto& c : grid) note_e2(gen_e2_family1(ctx, cfun_indicator(n, e), c), "F1");
    }
  }

  // F2 / G3 per character with chi* != chi
  for (int ci : an.nonzero_chi) {
    if (an.selfstar[ci]) continue;
    const CFun& chi = an.characters[ci].values;
    for (const auto& c1 : grid)
      for (const auto& c2 : grid) note_e2(gen_e2_family2(ctx, chi, c1, c2), "F2#" + std::to_string(std::min(ci, an.star_index[ci])));
    for (const auto& alpha : grid)
      for (const auto& beta : grid) {
        DescriptorE1 d{E1Tag::G3};
        d.theta = an.null_basis.empty() ? cfun_zero(n) : an.null_basis.front();
        d.chi = chi;
        d.alpha = alpha;
        d.beta = beta;
        note_e1(gen_e1_family(ctx, d), "G3#" + std::to_string(std::min(ci, an.star_index[ci])));
      }
  }

  // G1 / G2: theta over the nullspace basis, free function fixed
  std::vector<CFun> thetas{cfun_zero(n)};
  for (const auto& b : an.null_basis) thetas.push_back(b);
  for (const auto& th : thetas) {
    DescriptorE1 d1{E1Tag::G1};
    d1.theta = th;
    d1.free_fn = cfun_const(n, Scalar::one());
    note_e1(gen_e1_family(ctx, d1), "G1");
    DescriptorE1 d2{E1Tag::G2};
    d2.theta = th;
    d2.free_fn = cfun_indicator(n, 0);
    note_e1(gen_e1_family(ctx, d2), "G2");
  }

  return out;
}

// ---------------------------------------------------------------------------
// numeric solvers
// ---------------------------------------------------------------------------

struct NumericE2Solution {
  VecC k, l;
  double residual = 0.0;
  int anchor = 0;
};
struct NumericE1Solution {
  VecC f, g, h;
  double residual = 0.0;
  int anchor = 0;
};

/// Newton/least-squares sweep over the bilinear E2 system with k(anchor) = 1
/// pinned, every anchor tried, random restarts plus seeds at the generated
/// family solutions and perturbations of them. The k = 0 stratum (l arbitrary)
/// is reported symbolically by callers, never searched numerically.
inline std::vector<NumericE2Solution> solve_e2_numeric(const Context& ctx, const OracleConfig& cfg,
                                                       const std::vector<E2Solution>& seeds = {}) {
  const int n = ctx.order();
  const VecC mu = embed(ctx.mu.values);
  std::vector<NumericE2Solution> out;
  std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ull);

  const int per_anchor = (cfg.attempts + n - 1) / n;
  for (int anchor = 0; anchor < n; ++anchor) {
    const auto feval = [&](const Eigen::VectorXcd& z) {
      Eigen::VectorXcd F(n * n + 1);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          F(x * n + y) = mu[y] * z(ctx.s.mul(x, ctx.sigma(y))) - z(x) * z(n + y) + z(y) * z(n + x);
      F(n * n) = z(anchor) - 1.0;
      return F;
    };
    const auto jeval = [&](const Eigen::VectorXcd& z) {
      Eigen::MatrixXcd J = Eigen::MatrixXcd::Zero(n * n + 1, 2 * n);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          const int row = x * n + y;
          J(row, ctx.s.mul(x, ctx.sigma(y))) += mu[y];
          J(row, x) -= z(n + y);
          J(row, y) += z(n + x);
          J(row, n + y) -= z(x);
          J(row, n + x) += z(y);
        }
      J(n * n, anchor) = 1.0;
      return J;
    };

    std::vector<Eigen::VectorXcd> starts;
    for (int a = 0; a < per_anchor; ++a) starts.push_back(detail::random_start(rng, 2 * n, 1.5));
    for (const auto& s : seeds) {
      const Cx ka = s.k[anchor].to_complex();
      if (std::abs(ka) < 1e-9) continue;
      Eigen::VectorXcd z(2 * n);
      for (int i = 0; i < n; ++i) {
        z(i) = s.k[i].to_complex() / ka;  // (t k, l) is still a solution
        z(n + i) = s.l[i].to_complex();
      }
      starts.push_back(z);
      Eigen::VectorXcd zp = z + detail::random_start(rng, 2 * n, 1e-3);
      starts.push_back(zp);
    }

    for (auto& z : starts) {
      if (!detail::gauss_newton(feval, jeval, z, cfg.tol_converge, cfg.max_newton_iter)) continue;
      NumericE2Solution sol;
      sol.k.assign(n, Cx{});
      sol.l.assign(n, Cx{});
      for (int i = 0; i < n; ++i) {
        sol.k[i] = z(i);
        sol.l[i] = z(n + i);
      }
      sol.anchor = anchor;
      sol.residual = detail::residual_e2_quad(ctx, sol.k, sol.l);
      if (sol.residual <= cfg.tol_converge) out.push_back(std::move(sol));
    }
  }
  return out;
}

inline std::vector<NumericE1Solution> solve_e1_numeric(const Context& ctx, const OracleConfig& cfg,
                                                       const std::vector<E1Solution>& seeds = {}) {
  const int n = ctx.order();
  const VecC mu = embed(ctx.mu.values);
  std::vector<NumericE1Solution> out;
  std::mt19937_64 rng(cfg.seed ^ 0xc2b2ae3d27d4eb4full);

  const int per_anchor = (cfg.attempts + n - 1) / n;
  for (int anchor = 0; anchor < n; ++anchor) {
    const auto feval = [&](const Eigen::VectorXcd& z) {
      Eigen::VectorXcd F(n * n + 1);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          F(x * n + y) = z(ctx.s.mul(x, y)) - mu[y] * z(ctx.s.mul(ctx.sigma(y), x)) - z(n + x) * z(2 * n + y);
      F(n * n) = z(2 * n + anchor) - 1.0;
      return F;
    };
    const auto jeval = [&](const Eigen::VectorXcd& z) {
      Eigen::MatrixXcd J = Eigen::MatrixXcd::Zero(n * n + 1, 3 * n);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          const int row = x * n + y;
          J(row, ctx.s.mul(x, y)) += 1.0;
          J(row, ctx.s.mul(ctx.sigma(y), x)) -= mu[y];
          J(row, n + x) -= z(2 * n + y);
          J(row, 2 * n + y) -= z(n + x);
        }
      J(n * n, 2 * n + anchor) = 1.0;
      return J;
    };

    std::vector<Eigen::VectorXcd> starts;
    for (int a = 0; a < per_anchor; ++a) starts.push_back(detail::random_start(rng, 3 * n, 1.5));
    for (const auto& s : seeds) {
      const Cx ha = s.h[anchor].to_complex();
      if (std::abs(ha) < 1e-9) continue;
      Eigen::VectorXcd z(3 * n);
      for (int i = 0; i < n; ++i) {
        z(i) = s.f[i].to_complex();
        z(n + i) = s.g[i].to_complex() * ha;  // (t g, h/t) is the same solution
        z(2 * n + i) = s.h[i].to_complex() / ha;
      }
      starts.push_back(z);
      starts.push_back(z + detail::random_start(rng, 3 * n, 1e-3));
    }

    for (auto& z : starts) {
      if (!detail::gauss_newton(feval, jeval, z, cfg.tol_converge, cfg.max_newton_iter)) continue;
      NumericE1Solution sol;
      sol.f.assign(n, Cx{});
      sol.g.assign(n, Cx{});
      sol.h.assign(n, Cx{});
      for (int i = 0; i < n; ++i) {
        sol.f[i] = z(i);
        sol.g[i] = z(n + i);
        sol.h[i] = z(2 * n + i);
      }
      sol.anchor = anchor;
      sol.residual = detail::residual_e1_quad(ctx, sol.f, sol.g, sol.h);
      if (sol.residual <= cfg.tol_converge) out.push_back(std::move(sol));
    }
  }
  return out;
}

}  // namespace feq
