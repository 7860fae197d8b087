#pragma once

#include <array>
#include <functional>

#include "feq/families.hpp"

namespace feq {

struct NonEvaluableProductError : std::runtime_error {
  explicit NonEvaluableProductError(const std::string& what_fn)
      : std::runtime_error("window carrier has no closed form for: " + what_fn) {}
};

/// Infinite carrier given by closed forms, checked on a finite window. The
/// window only bounds quantifier ranges; products are always evaluated by the
/// closed forms and may leave the window.
struct WindowCarrier {
  using Elem = std::array<long long, 2>;  // second coordinate unused in 1-d carriers
  using ElemFn = std::function<Scalar(const Elem&)>;

  std::string name;
  int dim = 1;
  std::vector<Elem> window;
  std::function<Elem(const Elem&, const Elem&)> mul;
  std::function<Elem(const Elem&)> sigma;
  ElemFn mu, chi;
  ElemFn a_fn;                         // distinguished additive function
  std::vector<ElemFn> additive_basis;  // basis of the declared additive space
  std::string compatibility = "unknown";  // declared flag, not a decision procedure

  std::string elem_str(const Elem& e) const {
    return dim == 1 ? std::to_string(e[0]) : "(" + std::to_string(e[0]) + "," + std::to_string(e[1]) + ")";
  }
};

/// (Z^2, +), sigma = coordinate swap, mu = chi = 1, A(x,y) = x - y,
/// window [-r, r]^2. Carries the nonzero additive function the finite
/// carriers cannot have; compatible by declaration (Z^2 is a group).
inline WindowCarrier builtin_lattice2d(long long radius) {
  if (radius < 1) throw std::invalid_argument("radius must be >= 1");
  WindowCarrier w;
  w.name = "lattice2d";
  w.dim = 2;
  for (long long x = -radius; x <= radius; ++x)
    for (long long y = -radius; y <= radius; ++y) w.window.push_back({x, y});
  w.mul = [](const WindowCarrier::Elem& a, const WindowCarrier::Elem& b) {
    return WindowCarrier::Elem{a[0] + b[0], a[1] + b[1]};
  };
  w.sigma = [](const WindowCarrier::Elem& a) { return WindowCarrier::Elem{a[1], a[0]}; };
  w.mu = [](const WindowCarrier::Elem&) { return Scalar::one(); };
  w.chi = [](const WindowCarrier::Elem&) { return Scalar::one(); };
  w.a_fn = [](const WindowCarrier::Elem& a) { return Scalar::from_int(a[0] - a[1]); };
  w.additive_basis = {[](const WindowCarrier::Elem& a) { return Scalar::from_int(a[0]); },
                      [](const WindowCarrier::Elem& a) { return Scalar::from_int(a[1]); }};
  w.compatibility = "yes";
  return w;
}

/// (Z, +), sigma(x) = -x, mu = 1, chi(x) = e^(2*pi*i*lambda*x) for rational
/// lambda = num/den (so chi != chi* unless lambda is 0 or 1/2), window [-r, r].
inline WindowCarrier builtin_line_with_inversion(long long radius, long long lam_num, long long lam_den) {
  if (radius < 1) throw std::invalid_argument("radius must be >= 1");
  const Frac lam(lam_num, lam_den);
  WindowCarrier w;
  w.name = "line_with_inversion";
  w.dim = 1;
  for (long long x = -radius; x <= radius; ++x) w.window.push_back({x, 0});
  w.mul = [](const WindowCarrier::Elem& a, const WindowCarrier::Elem& b) {
    return WindowCarrier::Elem{a[0] + b[0], 0};
  };
  w.sigma = [](const WindowCarrier::Elem& a) { return WindowCarrier::Elem{-a[0], 0}; };
  w.mu = [](const WindowCarrier::Elem&) { return Scalar::one(); };
  w.chi = [lam](const WindowCarrier::Elem& a) {
    return Scalar::root_of_unity(lam.num * a[0], lam.den);
  };
  w.a_fn = [](const WindowCarrier::Elem& a) { return Scalar::from_int(a[0]); };
  w.additive_basis = {[](const WindowCarrier::Elem& a) { return Scalar::from_int(a[0]); }};
  w.compatibility = "yes";
  return w;
}

inline Scalar window_star(const WindowCarrier& w, const WindowCarrier::ElemFn& f,
                          const WindowCarrier::Elem& x) {
  return w.mu(x) * f(w.sigma(x));
}

/// Re-verifies every declared identity on the constructed window instead of
/// trusting the closed forms: associativity, sigma, mu, chi, A, and the basis.
struct WindowAudit {
  bool associative = true;
  bool sigma_involutive = true, sigma_automorphism = true;
  bool mu_multiplicative = true, mu_admissible = true;
  bool chi_multiplicative = true;
  bool a_additive = true, a_odd = true, basis_additive = true;

  bool all_ok() const {
    return associative && sigma_involutive && sigma_automorphism && mu_multiplicative && mu_admissible &&
           chi_multiplicative && a_additive && a_odd && basis_additive;
  }
};

inline WindowAudit audit_window(const WindowCarrier& w) {
  WindowAudit a;
  const auto eq = [](const WindowCarrier::Elem& x, const WindowCarrier::Elem& y) { return x == y; };
  for (const auto& x : w.window) {
    a.sigma_involutive = a.sigma_involutive && eq(w.sigma(w.sigma(x)), x);
    a.mu_admissible = a.mu_admissible && (w.mu(w.mul(x, w.sigma(x))) == Scalar::one());
    if (w.a_fn) a.a_odd = a.a_odd && (w.a_fn(w.sigma(x)) + w.a_fn(x)).is_zero();
  }
  for (const auto& x : w.window)
    for (const auto& y : w.window) {
      const auto xy = w.mul(x, y);
      a.sigma_automorphism = a.sigma_automorphism && eq(w.sigma(xy), w.mul(w.sigma(x), w.sigma(y)));
      a.mu_multiplicative = a.mu_multiplicative && (w.mu(xy) == w.mu(x) * w.mu(y));
      a.chi_multiplicative = a.chi_multiplicative && (w.chi(xy) == w.chi(x) * w.chi(y));
      if (w.a_fn) a.a_additive = a.a_additive && (w.a_fn(xy) - w.a_fn(x) - w.a_fn(y)).is_zero();
      for (const auto& b : w.additive_basis)
        a.basis_additive = a.basis_additive && (b(xy) - b(x) - b(y)).is_zero();
    }
  // associativity sampled on window triples
  for (const auto& x : w.window)
    for (const auto& y : w.window)
      for (const auto& z : w.window)
        a.associative = a.associative && eq(w.mul(w.mul(x, y), z), w.mul(x, w.mul(y, z)));
  return a;
}

enum class WindowCheck { E1, E2, SineAddition };

struct WindowPayload {
  WindowCarrier::ElemFn f, g, h;  // E1
  WindowCarrier::ElemFn k, l;     // E2, sine addition (l plays m)
};

struct WindowReport {
  double max_abs = 0.0;
  bool exact_zero = true;
  WindowCarrier::Elem worst_x{}, worst_y{};
  long long pairs = 0;
};

/// Runs the chosen residual over all window pairs; products are evaluated by
/// the closed forms and may land outside the window.
inline WindowReport verify_window(const WindowCarrier& w, WindowCheck check, const WindowPayload& p) {
  const auto need = [](const WindowCarrier::ElemFn& fn, const char* name) {
    if (!fn) throw NonEvaluableProductError(name);
  };
  if (check == WindowCheck::E1) {
    need(p.f, "f");
    need(p.g, "g");
    need(p.h, "h");
  } else {
    need(p.k, "k");
    need(p.l, check == WindowCheck::E2 ? "l" : "m");
  }
  WindowReport rep;
  for (const auto& x : w.window)
    for (const auto& y : w.window) {
      Scalar r;
      switch (check) {
        case WindowCheck::E1:
          r = p.f(w.mul(x, y)) - w.mu(y) * p.f(w.mul(w.sigma(y), x)) - p.g(x) * p.h(y);
          break;
        case WindowCheck::E2:
          r = w.mu(y) * p.k(w.mul(x, w.sigma(y))) - p.k(x) * p.l(y) + p.k(y) * p.l(x);
          break;
        case WindowCheck::SineAddition:
          r = p.k(w.mul(x, y)) - p.k(x) * p.l(y) - p.k(y) * p.l(x);
          break;
      }
      ++rep.pairs;
      const double a = r.abs();
      if (!r.is_zero()) rep.exact_zero = false;
      if (a > rep.max_abs) {
        rep.max_abs = a;
        rep.worst_x = x;
        rep.worst_y = y;
      }
    }
  return rep;
}

/// k = chi A, l = chi(1 + cA): family (3) of the sine subtraction law on a
/// carrier whose chi never vanishes.
inline WindowPayload window_family_f3(const WindowCarrier& w, const Scalar& c) {
  if (!w.a_fn) throw NonEvaluableProductError("A");
  bool selfstar = true, a_nonzero = false;
  for (const auto& x : w.window) {
    selfstar = selfstar && (window_star(w, w.chi, x) == w.chi(x));
    a_nonzero = a_nonzero || !w.a_fn(x).is_zero();
  }
  if (!selfstar) throw DescriptorError(Clause::ChiNotSelfStar);
  if (!a_nonzero) throw DescriptorError(Clause::AIdenticallyZero);
  WindowPayload p;
  const auto chi = w.chi;
  const auto a = w.a_fn;
  p.k = [chi, a](const WindowCarrier::Elem& x) { return chi(x) * a(x); };
  p.l = [chi, a, c](const WindowCarrier::Elem& x) { return chi(x) * (Scalar::one() + c * a(x)); };
  return p;
}

/// f = theta + (alpha/2) chi A + (beta/4) chi A^2, g = alpha chi + beta chi A,
/// h = chi A (theta = 0 on the builtins).
inline WindowPayload window_family_g4(const WindowCarrier& w, const Scalar& alpha, const Scalar& beta) {
  if (!w.a_fn) throw NonEvaluableProductError("A");
  if (alpha.is_zero() && beta.is_zero()) throw DescriptorError(Clause::AlphaBetaBothZero);
  bool selfstar = true, a_nonzero = false;
  for (const auto& x : w.window) {
    selfstar = selfstar && (window_star(w, w.chi, x) == w.chi(x));
    a_nonzero = a_nonzero || !w.a_fn(x).is_zero();
  }
  if (!selfstar) throw DescriptorError(Clause::ChiNotSelfStar);
  if (!a_nonzero) throw DescriptorError(Clause::AIdenticallyZero);
  WindowPayload p;
  const Rat half(1, 2), quarter(1, 4);
  const auto chi = w.chi;
  const auto a = w.a_fn;
  p.f = [chi, a, alpha, beta, half, quarter](const WindowCarrier::Elem& x) {
    const Scalar ca = chi(x) * a(x);
    return (alpha * ca).scaled(half) + (beta * ca * a(x)).scaled(quarter);
  };
  p.g = [chi, a, alpha, beta](const WindowCarrier::Elem& x) {
    return alpha * chi(x) + beta * chi(x) * a(x);
  };
  p.h = [chi, a](const WindowCarrier::Elem& x) { return chi(x) * a(x); };
  return p;
}

/// f = alpha (chi+chi*)/2 + beta (chi-chi*)/2, g = beta (chi+chi*) + alpha (chi-chi*),
/// h = (chi-chi*)/2; requires chi != chi* somewhere on the window.
inline WindowPayload window_family_g3(const WindowCarrier& w, const Scalar& alpha, const Scalar& beta) {
  if (alpha.is_zero() && beta.is_zero()) throw DescriptorError(Clause::AlphaBetaBothZero);
  bool differs = false;
  for (const auto& x : w.window) differs = differs || !(window_star(w, w.chi, x) == w.chi(x));
  if (!differs) throw DescriptorError(Clause::ChiEqualsChiStar);
  const Rat half(1, 2);
  const auto chi = w.chi;
  const auto mu = w.mu;
  const auto sig = w.sigma;
  const auto chistar = [chi, mu, sig](const WindowCarrier::Elem& x) { return mu(x) * chi(sig(x)); };
  const auto ev = [chi, chistar, half](const WindowCarrier::Elem& x) {
    return (chi(x) + chistar(x)).scaled(half);
  };
  const auto od = [chi, chistar, half](const WindowCarrier::Elem& x) {
    return (chi(x) - chistar(x)).scaled(half);
  };
  WindowPayload p;
  p.f = [ev, od, alpha, beta](const WindowCarrier::Elem& x) { return alpha * ev(x) + beta * od(x); };
  p.g = [ev, od, alpha, beta](const WindowCarrier::Elem& x) {
    return Scalar::from_int(2) * (beta * ev(x) + alpha * od(x));
  };
  p.h = od;
  return p;
}

}  // namespace feq
