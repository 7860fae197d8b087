#pragma once

#include "feq/ideal.hpp"

namespace feq {

/// Carrier + involutive automorphism + admissible mu. Validated on
/// construction; immutable afterwards.
struct Context {
  FiniteSemigroup s;
  InvolutiveAutomorphism sigma;
  MuFunction mu;

  Context(FiniteSemigroup s_, InvolutiveAutomorphism sigma_, MuFunction mu_)
      : s(std::move(s_)), sigma(std::move(sigma_)), mu(std::move(mu_)) {
    if (static_cast<int>(sigma.perm.size()) != s.order() ||
        !InvolutiveAutomorphism::valid_for(s, sigma.perm))
      throw std::invalid_argument("sigma is not an involutive automorphism of the carrier");
    if (static_cast<int>(mu.values.size()) != s.order() || !MuFunction::admissible_for(s, sigma, mu.values))
      throw std::invalid_argument("mu is not multiplicative with mu(x*sigma(x)) = 1");
  }

  int order() const { return s.order(); }
  CFun star_of(const CFun& f) const { return star(s, sigma, mu, f); }
  CFun even_of(const CFun& f) const { return even_part(s, sigma, mu, f); }
  CFun odd_of(const CFun& f) const { return odd_part(s, sigma, mu, f); }
};

/// Basis of N_mu(sigma, S) = {theta : theta(xy) - mu(y) theta(sigma(y) x) = 0},
/// by exact elimination over the cyclotomic field.
inline std::vector<CFun> nullspace_basis(const Context& ctx) {
  const int n = ctx.order();
  std::vector<std::vector<Scalar>> rows;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      std::vector<Scalar> row(n);
      row[ctx.s.mul(x, y)] += Scalar::one();
      row[ctx.s.mul(ctx.sigma(y), x)] -= ctx.mu.values[y];
      bool nonzero = false;
      for (const auto& c : row) nonzero = nonzero || !c.is_zero();
      if (nonzero) rows.push_back(std::move(row));
    }
  return nullspace_basis_field<Scalar>(rows, n);
}

}  // namespace feq
