#pragma once

#include <vector>

#include "feq/scalar.hpp"

namespace feq {

template <class T>
struct FieldOps;

template <>
struct FieldOps<Rat> {
  static bool is_zero(const Rat& r) { return r == 0; }
  static Rat inv(const Rat& r) { return Rat(Rat(1) / r); }
  static Rat one() { return Rat(1); }
};

template <>
struct FieldOps<Scalar> {
  static bool is_zero(const Scalar& s) { return s.is_zero(); }
  static Scalar inv(const Scalar& s) { return s.inverse(); }
  static Scalar one() { return Scalar::one(); }
};

/// Basis of {v : M v = 0} over an exact field, by reduced row echelon form.
template <class T>
std::vector<std::vector<T>> nullspace_basis_field(std::vector<std::vector<T>> m, int ncols) {
  using F = FieldOps<T>;
  const int nrows = static_cast<int>(m.size());
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < ncols && r < nrows; ++c) {
    int pr = -1;
    for (int i = r; i < nrows; ++i)
      if (!F::is_zero(m[i][c])) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[r], m[pr]);
    const T inv = F::inv(m[r][c]);
    for (int j = c; j < ncols; ++j) m[r][j] = m[r][j] * inv;
    for (int i = 0; i < nrows; ++i) {
      if (i == r || F::is_zero(m[i][c])) continue;
      const T factor = m[i][c];
      for (int j = c; j < ncols; ++j) m[i][j] = m[i][j] - factor * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivot_col) is_pivot[c] = true;

  std::vector<std::vector<T>> basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(ncols, T{});
    v[f] = F::one();
    for (size_t pr = 0; pr < pivot_col.size(); ++pr) v[pivot_col[pr]] = T{} - m[pr][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace feq
