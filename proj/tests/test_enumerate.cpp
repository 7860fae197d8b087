#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "feq/enumerate.hpp"

using namespace feq;

namespace {

// independent oracle: every table of order n, associativity checked directly
std::set<std::vector<int>> brute_force_tables(int n) {
  std::set<std::vector<int>> out;
  const int cells = n * n;
  long long total = 1;
  for (int i = 0; i < cells; ++i) total *= n;
  for (long long code = 0; code < total; ++code) {
    std::vector<int> flat(cells);
    long long c = code;
    for (int i = 0; i < cells; ++i) {
      flat[i] = static_cast<int>(c % n);
      c /= n;
    }
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        for (int z = 0; z < n && ok; ++z)
          ok = flat[flat[x * n + y] * n + z] == flat[x * n + flat[y * n + z]];
    if (ok) out.insert(flat);
  }
  return out;
}

std::vector<int> flat_of(const FiniteSemigroup& s) {
  std::vector<int> f;
  for (const auto& row : s.table()) f.insert(f.end(), row.begin(), row.end());
  return f;
}

}  // namespace

TEST_CASE("raw counts match full brute force") {
  CHECK(enumerate_small(1).size() == 1);

  const auto oracle2 = brute_force_tables(2);
  std::set<std::vector<int>> got2;
  for (const auto& s : enumerate_small(2)) got2.insert(flat_of(s));
  CHECK(got2 == oracle2);
  CHECK(got2.size() == 8);  // regression pin, derived from the brute force above

  const auto oracle3 = brute_force_tables(3);
  std::set<std::vector<int>> got3;
  for (const auto& s : enumerate_small(3)) got3.insert(flat_of(s));
  CHECK(got3 == oracle3);
  CHECK(got3.size() == 113);  // regression pin
}

TEST_CASE("canonical dedup matches independent grouping") {
  // group raw tables by an independently computed canonical form
  for (int n = 2; n <= 3; ++n) {
    std::set<std::vector<int>> classes;
    for (const auto& s : enumerate_small(n)) {
      std::vector<int> perm(n);
      for (int i = 0; i < n; ++i) perm[i] = i;
      std::vector<int> best;
      do {
        for (int flip = 0; flip < 2; ++flip) {
          std::vector<int> cand(n * n);
          for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
              const int v = flip ? s.mul(perm[y], perm[x]) : s.mul(perm[x], perm[y]);
              int vi = 0;
              while (perm[vi] != v) ++vi;
              cand[x * n + y] = vi;
            }
          if (best.empty() || cand < best) best = cand;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      classes.insert(best);
    }
    CHECK(enumerate_small(n, true).size() == classes.size());
  }
  CHECK(enumerate_small(2, true).size() == 4);   // regression pins from the grouping above
  CHECK(enumerate_small(3, true).size() == 18);
}

TEST_CASE("order four enumerates with pruning") {
  int count = 0;
  enumerate_small(4, false, [&](const FiniteSemigroup&) {
    ++count;
    return true;
  });
  CHECK(count == 3492);  // regression pin, first computed by this enumerator
}

TEST_CASE("early stop and order cap") {
  int seen = 0;
  enumerate_small(3, false, [&](const FiniteSemigroup&) { return ++seen < 5; });
  CHECK(seen == 5);
  CHECK_THROWS_AS(enumerate_small(5), OrderTooLargeError);
  CHECK_THROWS_AS(enumerate_small(0), OrderTooLargeError);
}
