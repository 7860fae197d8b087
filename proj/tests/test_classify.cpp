#include <catch2/catch_amalgamated.hpp>

#include "feq/enumerate.hpp"
#include "feq/oracle.hpp"
#include "fixtures.hpp"

using namespace feq;

namespace {

// descriptor equality modulo the documented redundancies: regenerate and
// compare g (x) h pointwise and f modulo the nullspace
bool same_solution(const Context& ctx, const ContextAnalysis& an, const E1Solution& a, const VecC& f,
                   const VecC& g, const VecC& h, double tol) {
  const int n = ctx.order();
  const VecC fa = embed(a.f), ga = embed(a.g), ha = embed(a.h);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (std::abs(ga[x] * ha[y] - g[x] * h[y]) > tol) return false;
  VecC diff(n);
  for (int x = 0; x < n; ++x) diff[x] = fa[x] - f[x];
  return nullspace_defect_c(ctx, an.mu_c, diff) <= tol;
}

}  // namespace

TEST_CASE("round trip: classify(generate) recovers the descriptor") {
  const auto ctx = fixtures::ctx_z3_inv();
  const auto an = analyze_context(ctx);
  const auto basis = nullspace_basis(ctx);

  for (const int ai : {-2, -1, 0, 1, 3})
    for (const int bi : {-2, 0, 1}) {
      if (ai == 0 && bi == 0) continue;
      DescriptorE1 d{E1Tag::G3};
      d.theta = basis[0];
      d.chi = fixtures::chi_omega();
      d.alpha = Scalar::from_int(ai);
      d.beta = Scalar::from_int(bi);
      const E1Solution sol = gen_e1_family(ctx, d);
      const auto cls = classify_solution(ctx, an, embed(sol.f), embed(sol.g), embed(sol.h), 1e-8);
      REQUIRE(cls.has_value());
      REQUIRE(cls->tag == E1Tag::G3);
      // chi recovered up to the chi <-> chi* swap, alpha intact, beta up to sign flip
      CHECK(std::abs(cls->alpha - Cx(ai, 0)) < 1e-8);
      const bool direct = std::abs(cls->beta - Cx(bi, 0)) < 1e-8;
      const bool swapped = std::abs(cls->beta + Cx(bi, 0)) < 1e-8;
      CHECK((direct || swapped));
      // theta representative lies in the nullspace
      CHECK(nullspace_defect_c(ctx, an.mu_c, cls->theta) < 1e-10);
      CHECK(same_solution(ctx, an, sol, embed(sol.f), embed(sol.g), embed(sol.h), 1e-9));
    }
}

TEST_CASE("classification is invariant under the tensor rescaling") {
  const auto ctx = fixtures::ctx_z3_inv();
  const auto an = analyze_context(ctx);
  DescriptorE1 d{E1Tag::G3};
  d.theta = cfun_zero(3);
  d.chi = fixtures::chi_omega();
  d.alpha = Scalar::zero();
  d.beta = Scalar::one();
  const E1Solution sol = gen_e1_family(ctx, d);

  VecC f = embed(sol.f), g = embed(sol.g), h = embed(sol.h);
  for (auto& v : g) v *= 2.0;  // (2g, h/2) is the same solution
  for (auto& v : h) v *= 0.5;
  const auto cls = classify_solution(ctx, an, f, g, h, 1e-8);
  REQUIRE(cls.has_value());
  CHECK(cls->tag == E1Tag::G3);
  CHECK(std::abs(cls->alpha - Cx(0, 0)) < 1e-8);
  CHECK(std::abs(std::abs(cls->beta) - 1.0) < 1e-8);
}

TEST_CASE("degenerate tensors classify as G1/G2") {
  const auto ctx = fixtures::ctx_z3_inv();
  const auto an = analyze_context(ctx);
  const auto basis = nullspace_basis(ctx);
  const VecC theta = embed(basis[0]);

  const VecC zero(3, Cx{});
  VecC h = {Cx(1, 0), Cx(0, 2), Cx(-3, 0)};
  const auto g1 = classify_solution(ctx, an, theta, zero, h, 1e-8);
  REQUIRE(g1.has_value());
  CHECK(g1->tag == E1Tag::G1);

  const auto g2 = classify_solution(ctx, an, theta, h, zero, 1e-8);
  REQUIRE(g2.has_value());
  CHECK(g2->tag == E1Tag::G2);
}

TEST_CASE("residual precondition is enforced") {
  const auto ctx = fixtures::ctx_z3_inv();
  const auto an = analyze_context(ctx);
  const VecC f = {Cx(1, 0), Cx(2, 0), Cx(3, 0)};
  const VecC g = {Cx(1, 0), Cx(1, 0), Cx(1, 0)};
  CHECK_THROWS_AS(classify_solution(ctx, an, f, g, g, 1e-8), ResidualTooLargeError);
}

TEST_CASE("classify_e2 recovers F1 and F2") {
  const auto nctx = fixtures::ctx_null3_id();
  const auto nan = analyze_context(nctx);
  const auto f1 = gen_e2_family1(nctx, {Scalar::one(), Scalar::from_int(2), Scalar::zero()},
                                 Scalar::from_int(5));
  const auto c1 = classify_e2(nctx, nan, embed(f1.k), embed(f1.l), 1e-8);
  REQUIRE(c1.has_value());
  CHECK(c1->tag == E2Tag::F1);
  CHECK(std::abs(c1->c - Cx(5, 0)) < 1e-8);

  const auto ctx = fixtures::ctx_z3_inv();
  const auto an = analyze_context(ctx);
  const auto f2 = gen_e2_family2(ctx, fixtures::chi_omega(), Scalar::from_int(3), Scalar::from_int(-2));
  const auto c2 = classify_e2(ctx, an, embed(f2.k), embed(f2.l), 1e-8);
  REQUIRE(c2.has_value());
  CHECK(c2->tag == E2Tag::F2);
  CHECK(std::abs(std::abs(c2->c1) - 3.0) < 1e-8);  // sign absorbs into the chi <-> chi* choice
  CHECK(std::abs(std::abs(c2->c2) - 2.0) < 1e-8);
}

TEST_CASE("round trip holds on every context of order <= 3") {
  // every generated grid solution classifies back to the stratum it came from
  for (int n = 1; n <= 3; ++n)
    for (const auto& s : enumerate_small(n))
      for (const auto& sigma : enumerate_involutive_automorphisms(s))
        for (const auto& mu : enumerate_mu(s, sigma)) {
          const Context ctx(s, sigma, mu);
          const auto an = analyze_context(ctx);
          const auto grid = generated_grid_check(ctx, an);
          REQUIRE(grid.all_exact_zero);
          const auto canon = [&](int ci) { return std::min(ci, an.star_index[ci]); };
          for (size_t i = 0; i < grid.e1.size(); ++i) {
            const auto& sol = grid.e1[i];
            const auto cls =
                classify_solution(ctx, an, embed(sol.f), embed(sol.g), embed(sol.h), 1e-8);
            REQUIRE(cls.has_value());
            std::string key = tag_name(cls->tag);
            if (cls->chi_index >= 0) key += "#" + std::to_string(canon(cls->chi_index));
            REQUIRE(key == grid.e1_keys[i]);
          }
          for (size_t i = 0; i < grid.e2.size(); ++i) {
            const auto& sol = grid.e2[i];
            const auto cls = classify_e2(ctx, an, embed(sol.k), embed(sol.l), 1e-8);
            REQUIRE(cls.has_value());
            std::string key = tag_name(cls->tag);
            if (cls->chi_index >= 0) key += "#" + std::to_string(canon(cls->chi_index));
            REQUIRE(key == grid.e2_keys[i]);
          }
        }
}
