#pragma once

#include "feq/context.hpp"

namespace fixtures {

using namespace feq;

inline FiniteSemigroup z2() { return FiniteSemigroup({{0, 1}, {1, 0}}, {}, "Z2"); }
inline FiniteSemigroup z3() { return FiniteSemigroup({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, {}, "Z3"); }
inline FiniteSemigroup z4() {
  return FiniteSemigroup({{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}}, {}, "Z4");
}
inline FiniteSemigroup klein() {
  return FiniteSemigroup({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}, {}, "V4");
}

/// {1, p, 0} with p^2 = 0 and 0 absorbing; indices 0 -> 1, 1 -> p, 2 -> 0.
inline FiniteSemigroup mono3() {
  return FiniteSemigroup({{0, 1, 2}, {1, 2, 2}, {2, 2, 2}}, {"1", "p", "0"}, "mono3");
}

/// {1, p, q, 0} with p^2 = q^2 = pq = qp = 0; indices 0,1,2,3 -> 1,p,q,0.
inline FiniteSemigroup mono4() {
  return FiniteSemigroup({{0, 1, 2, 3}, {1, 3, 3, 3}, {2, 3, 3, 3}, {3, 3, 3, 3}}, {"1", "p", "q", "0"},
                         "mono4");
}

/// Null semigroup on {a, b, z}: every product is z (index 2).
inline FiniteSemigroup null3() {
  return FiniteSemigroup({{2, 2, 2}, {2, 2, 2}, {2, 2, 2}}, {"a", "b", "z"}, "null3");
}

inline MuFunction mu_one(int n) { return {cfun_const(n, Scalar::one())}; }

inline Context ctx_z3_inv() { return Context(z3(), {{0, 2, 1}}, mu_one(3)); }
inline Context ctx_z3_id() { return Context(z3(), {{0, 1, 2}}, mu_one(3)); }
inline Context ctx_z2_id() { return Context(z2(), {{0, 1}}, mu_one(2)); }
inline Context ctx_mono3() { return Context(mono3(), {{0, 1, 2}}, mu_one(3)); }
inline Context ctx_null3_id() { return Context(null3(), {{0, 1, 2}}, mu_one(3)); }
inline Context ctx_null3_swap() { return Context(null3(), {{1, 0, 2}}, mu_one(3)); }
inline Context ctx_mono4_swap() { return Context(mono4(), {{0, 2, 1, 3}}, mu_one(4)); }

/// chi(x) = omega^x on Z3, omega = e^(2 pi i/3)
inline CFun chi_omega() {
  return {Scalar::one(), Scalar::root_of_unity(1, 3), Scalar::root_of_unity(2, 3)};
}

}  // namespace fixtures
