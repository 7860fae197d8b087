#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "feq/scalar.hpp"

namespace feq {

/// Subset of a finite carrier as a bitmask; carriers never exceed order 16 here.
struct ElementSet {
  uint32_t mask = 0;

  static ElementSet empty() { return {}; }
  static ElementSet full(int n) { return {n >= 32 ? ~0u : (1u << n) - 1}; }
  static ElementSet of(std::initializer_list<int> xs) {
    ElementSet s;
    for (int x : xs) s.insert(x);
    return s;
  }

  bool contains(int x) const { return (mask >> x) & 1u; }
  void insert(int x) { mask |= 1u << x; }
  int size() const { return __builtin_popcount(mask); }
  bool is_empty() const { return mask == 0; }

  ElementSet complement(int n) const { return {full(n).mask & ~mask}; }
  bool subset_of(const ElementSet& o) const { return (mask & ~o.mask) == 0; }
  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  std::vector<int> to_vector() const {
    std::vector<int> v;
    for (int i = 0; i < 32; ++i)
      if (contains(i)) v.push_back(i);
    return v;
  }
};

struct NonAssociativeError : std::runtime_error {
  int x, y, z;
  NonAssociativeError(int x_, int y_, int z_)
      : std::runtime_error("not associative at triple (" + std::to_string(x_) + "," + std::to_string(y_) + "," +
                           std::to_string(z_) + ")"),
        x(x_),
        y(y_),
        z(z_) {}
};

/// Finite semigroup as a Cayley table over dense indices 0..n-1.
/// Labels are presentation-only.
class FiniteSemigroup {
 public:
  FiniteSemigroup(std::vector<std::vector<int>> table, std::vector<std::string> labels = {},
                  std::string name = {})
      : table_(std::move(table)), labels_(std::move(labels)), name_(std::move(name)) {
    n_ = static_cast<int>(table_.size());
    if (n_ == 0) throw std::invalid_argument("empty table");
    for (const auto& row : table_) {
      if (static_cast<int>(row.size()) != n_) throw std::invalid_argument("table not square");
      for (int v : row)
        if (v < 0 || v >= n_) throw std::out_of_range("table entry out of range");
    }
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n_)
      throw std::invalid_argument("labels size mismatch");
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        for (int z = 0; z < n_; ++z)
          if (table_[table_[x][y]][z] != table_[x][table_[y][z]]) throw NonAssociativeError(x, y, z);
  }

  int order() const { return n_; }
  int mul(int x, int y) const { return table_[x][y]; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::string label(int x) const {
    return labels_.empty() ? std::to_string(x) : labels_[x];
  }

  ElementSet all() const { return ElementSet::full(n_); }

 private:
  int n_;
  std::vector<std::vector<int>> table_;
  std::vector<std::string> labels_;
  std::string name_;
};

/// Complex-valued function on a finite carrier, one exact scalar per element.
using CFun = std::vector<Scalar>;

inline CFun cfun_zero(int n) { return CFun(static_cast<size_t>(n)); }
inline CFun cfun_const(int n, const Scalar& v) { return CFun(static_cast<size_t>(n), v); }
inline CFun cfun_indicator(int n, int at, Scalar v = Scalar::one()) {
  CFun f = cfun_zero(n);
  f[at] = std::move(v);
  return f;
}
inline bool cfun_is_zero(const CFun& f) {
  for (const auto& v : f)
    if (!v.is_zero()) return false;
  return true;
}

/// {t1*t2 : t1 in a, t2 in b}
inline ElementSet product_set(const FiniteSemigroup& s, const ElementSet& a, const ElementSet& b) {
  ElementSet r;
  for (int x = 0; x < s.order(); ++x) {
    if (!a.contains(x)) continue;
    for (int y = 0; y < s.order(); ++y)
      if (b.contains(y)) r.insert(s.mul(x, y));
  }
  return r;
}

inline ElementSet squared_set(const FiniteSemigroup& s) { return product_set(s, s.all(), s.all()); }

inline bool is_ideal(const FiniteSemigroup& s, const ElementSet& i) {
  for (int x = 0; x < s.order(); ++x)
    for (int q = 0; q < s.order(); ++q)
      if (i.contains(q) && (!i.contains(s.mul(x, q)) || !i.contains(s.mul(q, x)))) return false;
  return true;
}

inline bool is_subsemigroup(const FiniteSemigroup& s, const ElementSet& t) {
  for (int x = 0; x < s.order(); ++x)
    for (int y = 0; y < s.order(); ++y)
      if (t.contains(x) && t.contains(y) && !t.contains(s.mul(x, y))) return false;
  return true;
}

/// All proper nonempty ideals whose complement is multiplicatively closed.
inline std::vector<ElementSet> prime_ideals(const FiniteSemigroup& s) {
  std::vector<ElementSet> out;
  const uint32_t fullmask = ElementSet::full(s.order()).mask;
  for (uint32_t m = 1; m < fullmask; ++m) {
    ElementSet i{m};
    if (is_ideal(s, i) && is_subsemigroup(s, i.complement(s.order()))) out.push_back(i);
  }
  return out;
}

inline bool is_central(const FiniteSemigroup& s, const CFun& f) {
  for (int x = 0; x < s.order(); ++x)
    for (int y = 0; y < x; ++y)
      if (f[s.mul(x, y)] != f[s.mul(y, x)]) return false;
  return true;
}

inline bool is_abelian_fn(const FiniteSemigroup& s, const CFun& f) {
  if (!is_central(s, f)) return false;
  for (int x = 0; x < s.order(); ++x)
    for (int y = 0; y < s.order(); ++y)
      for (int z = 0; z < y; ++z)
        if (f[s.mul(s.mul(x, y), z)] != f[s.mul(s.mul(x, z), y)]) return false;
  return true;
}

}  // namespace feq
