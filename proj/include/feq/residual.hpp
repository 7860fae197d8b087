#pragma once

#include <complex>

#include "feq/context.hpp"

namespace feq {

using Cx = std::complex<double>;
using VecC = std::vector<Cx>;

/// Worst-pair report for a functional-equation residual. exact_zero is only
/// meaningful for exact inputs; max_abs comes from the float embedding.
struct ResidualReport {
  double max_abs = 0.0;
  int worst_x = -1, worst_y = -1;
  bool exact_zero = true;

  void take(double a, int x, int y, bool zero) {
    exact_zero = exact_zero && zero;
    if (a > max_abs) {
      max_abs = a;
      worst_x = x;
      worst_y = y;
    }
  }
};

/// max over (x,y) of |mu(y) k(x sigma(y)) - k(x) l(y) + k(y) l(x)|
inline ResidualReport residual_e2(const Context& ctx, const CFun& k, const CFun& l) {
  ResidualReport rep;
  const int n = ctx.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const Scalar r =
          ctx.mu.values[y] * k[ctx.s.mul(x, ctx.sigma(y))] - k[x] * l[y] + k[y] * l[x];
      rep.take(r.abs(), x, y, r.is_zero());
    }
  return rep;
}

/// max over (x,y) of |f(xy) - mu(y) f(sigma(y) x) - g(x) h(y)|
inline ResidualReport residual_e1(const Context& ctx, const CFun& f, const CFun& g, const CFun& h) {
  ResidualReport rep;
  const int n = ctx.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const Scalar r =
          f[ctx.s.mul(x, y)] - ctx.mu.values[y] * f[ctx.s.mul(ctx.sigma(y), x)] - g[x] * h[y];
      rep.take(r.abs(), x, y, r.is_zero());
    }
  return rep;
}

/// max over (x,y) of |k(xy) - k(x) m(y) - k(y) m(x)|  (sine addition law)
inline ResidualReport sine_addition_residual(const Context& ctx, const CFun& k, const CFun& m) {
  ResidualReport rep;
  const int n = ctx.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const Scalar r = k[ctx.s.mul(x, y)] - k[x] * m[y] - k[y] * m[x];
      rep.take(r.abs(), x, y, r.is_zero());
    }
  return rep;
}

// --- numeric variants on complex vectors (oracle / classification path) ---

inline VecC embed(const CFun& f) {
  VecC v(f.size());
  for (size_t i = 0; i < f.size(); ++i) v[i] = f[i].to_complex();
  return v;
}

inline double max_abs(const VecC& v) {
  double m = 0.0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

inline ResidualReport residual_e2_c(const Context& ctx, const VecC& mu, const VecC& k, const VecC& l) {
  ResidualReport rep;
  rep.exact_zero = false;
  const int n = ctx.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const Cx r = mu[y] * k[ctx.s.mul(x, ctx.sigma(y))] - k[x] * l[y] + k[y] * l[x];
      rep.take(std::abs(r), x, y, false);
    }
  return rep;
}

inline ResidualReport residual_e1_c(const Context& ctx, const VecC& mu, const VecC& f, const VecC& g,
                                    const VecC& h) {
  ResidualReport rep;
  rep.exact_zero = false;
  const int n = ctx.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const Cx r = f[ctx.s.mul(x, y)] - mu[y] * f[ctx.s.mul(ctx.sigma(y), x)] - g[x] * h[y];
      rep.take(std::abs(r), x, y, false);
    }
  return rep;
}

/// max over (x,y) of |theta(xy) - mu(y) theta(sigma(y) x)|: distance of theta
/// from satisfying the nullspace identity, numerically.
inline double nullspace_defect_c(const Context& ctx, const VecC& mu, const VecC& theta) {
  double m = 0.0;
  const int n = ctx.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      m = std::max(m, std::abs(theta[ctx.s.mul(x, y)] - mu[y] * theta[ctx.s.mul(ctx.sigma(y), x)]));
  return m;
}

}  // namespace feq
