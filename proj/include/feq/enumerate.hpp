#pragma once

#include <functional>
#include <set>

#include "feq/semigroup.hpp"

namespace feq {

struct OrderTooLargeError : std::invalid_argument {
  explicit OrderTooLargeError(int n)
      : std::invalid_argument("enumerate_small supports order <= 4, got " + std::to_string(n)) {}
};

namespace detail {

// Checks every associativity triple whose four lookups are already filled
// (-1 marks unfilled). Returns false on a violated determined triple.
inline bool prefix_associative(const std::vector<std::vector<int>>& t, int n) {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int xy = t[x][y];
      if (xy < 0) continue;
      for (int z = 0; z < n; ++z) {
        const int yz = t[y][z];
        if (yz < 0) continue;
        const int a = t[xy][z];
        const int b = t[x][yz];
        if (a >= 0 && b >= 0 && a != b) return false;
      }
    }
  return true;
}

inline std::vector<int> flatten(const std::vector<std::vector<int>>& t) {
  std::vector<int> f;
  for (const auto& row : t) f.insert(f.end(), row.begin(), row.end());
  return f;
}

inline int perm_index(const std::vector<int>& perm, int v) {
  for (size_t i = 0; i < perm.size(); ++i)
    if (perm[i] == v) return static_cast<int>(i);
  return -1;
}

// Minimal flattened table over all relabelings and the transpose
// (isomorphism and anti-isomorphism).
inline std::vector<int> canonical_form(const std::vector<std::vector<int>>& t) {
  const int n = static_cast<int>(t.size());
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<int> best;
  std::vector<std::vector<int>> c(n, std::vector<int>(n));
  do {
    for (int flip = 0; flip < 2; ++flip) {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          const int px = perm[x], py = perm[y];
          c[x][y] = flip ? perm_index(perm, t[py][px]) : perm_index(perm, t[px][py]);
        }
      auto f = flatten(c);
      if (best.empty() || f < best) best = std::move(f);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace detail

/// Streams every associative n-by-n table (n <= 4) in lexicographic row-major
/// order, by backtracking with incremental associativity pruning. With
/// canonical=true only one representative per isomorphism/anti-isomorphism
/// class is emitted. The visitor returns false to stop early.
inline void enumerate_small(int n, bool canonical, const std::function<bool(const FiniteSemigroup&)>& visit) {
  if (n < 1 || n > 4) throw OrderTooLargeError(n);
  std::vector<std::vector<int>> t(n, std::vector<int>(n, -1));
  std::set<std::vector<int>> seen;
  bool stop = false;

  const std::function<void(int)> rec = [&](int pos) {
    if (stop) return;
    if (pos == n * n) {
      if (canonical) {
        auto cf = detail::canonical_form(t);
        if (!seen.insert(std::move(cf)).second) return;
      }
      if (!visit(FiniteSemigroup(t))) stop = true;
      return;
    }
    const int r = pos / n, c = pos % n;
    for (int v = 0; v < n && !stop; ++v) {
      t[r][c] = v;
      if (detail::prefix_associative(t, n)) rec(pos + 1);
    }
    t[r][c] = -1;
  };
  rec(0);
}

inline std::vector<FiniteSemigroup> enumerate_small(int n, bool canonical = false) {
  std::vector<FiniteSemigroup> out;
  enumerate_small(n, canonical, [&](const FiniteSemigroup& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

}  // namespace feq
