#pragma once

#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "mobchar/numbers.hpp"

namespace mobchar {

// Finite poset over dense indices 0..size-1; external ids live in a side
// table.  leq is stored as a full reflexive-transitive boolean relation,
// validated for antisymmetry at construction.
class Poset {
 public:
  Poset() = default;

  // Builds the reflexive-transitive closure of the given pairs and validates
  // antisymmetry.  Pairs are (lower, upper) in dense indices.
  static Poset from_pairs(std::size_t n,
                          const std::vector<std::pair<int, int>>& leq_pairs,
                          std::vector<long long> ids = {}) {
    Poset p;
    p.n_ = n;
    p.ids_ = std::move(ids);
    if (!p.ids_.empty() && p.ids_.size() != n)
      throw invalid_input("poset: id table size mismatch");
    p.leq_.assign(n * n, false);
    for (std::size_t i = 0; i < n; ++i) p.leq_[i * n + i] = true;
    for (auto [a, b] : leq_pairs) {
      if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n ||
          static_cast<std::size_t>(b) >= n)
        throw invalid_input("poset: pair index out of range");
      p.leq_[static_cast<std::size_t>(a) * n + b] = true;
    }
    // Warshall closure.
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) {
        if (!p.leq_[i * n + k]) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (p.leq_[k * n + j]) p.leq_[i * n + j] = true;
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p.leq_[i * n + j] && p.leq_[j * n + i])
          throw invalid_input("poset: cycle detected between elements " +
                              std::to_string(p.id(i)) + " and " +
                              std::to_string(p.id(j)));
    return p;
  }

  // Relation assumed already reflexive/transitive (e.g. computed orders);
  // still validated.
  static Poset from_relation(std::size_t n, std::vector<char> leq,
                             std::vector<long long> ids = {}) {
    if (leq.size() != n * n) throw invalid_input("poset: relation size mismatch");
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (leq[i * n + j]) pairs.emplace_back(static_cast<int>(i),
                                               static_cast<int>(j));
    return from_pairs(n, pairs, std::move(ids));
  }

  std::size_t size() const { return n_; }

  bool leq(int a, int b) const {
    return leq_[static_cast<std::size_t>(a) * n_ + b];
  }

  long long id(std::size_t dense) const {
    return ids_.empty() ? static_cast<long long>(dense) : ids_[dense];
  }

  std::vector<int> below(int x) const {  // the order ideal x^down
    std::vector<int> out;
    for (std::size_t y = 0; y < n_; ++y)
      if (leq(static_cast<int>(y), x)) out.push_back(static_cast<int>(y));
    return out;
  }

  std::vector<int> interval(int a, int b) const {  // [a, b]
    std::vector<int> out;
    if (!leq(a, b)) return out;
    for (std::size_t z = 0; z < n_; ++z)
      if (leq(a, static_cast<int>(z)) && leq(static_cast<int>(z), b))
        out.push_back(static_cast<int>(z));
    return out;
  }

  // Linear extension: minimal elements first, ties broken by index.
  std::vector<int> topological_order() const {
    std::vector<int> order;
    std::vector<char> placed(n_, 0);
    for (std::size_t round = 0; round < n_; ++round) {
      int next = -1;
      for (std::size_t i = 0; i < n_; ++i) {
        if (placed[i]) continue;
        bool minimal = true;
        for (std::size_t j = 0; j < n_; ++j)
          if (!placed[j] && j != i && leq(static_cast<int>(j), static_cast<int>(i))) {
            minimal = false;
            break;
          }
        if (minimal) {
          next = static_cast<int>(i);
          break;
        }
      }
      internal_check(next >= 0, "topological sort of a validated poset");
      placed[static_cast<std::size_t>(next)] = 1;
      order.push_back(next);
    }
    return order;
  }

 private:
  std::size_t n_ = 0;
  std::vector<char> leq_;
  std::vector<long long> ids_;
};

// Coordinatewise order on pairs; index of (a, b) is a * p2.size() + b.
inline Poset product_poset(const Poset& p1, const Poset& p2) {
  std::size_t n1 = p1.size(), n2 = p2.size();
  std::vector<char> rel(n1 * n2 * n1 * n2, 0);
  for (std::size_t a = 0; a < n1; ++a)
    for (std::size_t b = 0; b < n2; ++b)
      for (std::size_t c = 0; c < n1; ++c)
        for (std::size_t d = 0; d < n2; ++d)
          if (p1.leq(static_cast<int>(a), static_cast<int>(c)) &&
              p2.leq(static_cast<int>(b), static_cast<int>(d)))
            rel[(a * n2 + b) * n1 * n2 + (c * n2 + d)] = 1;
  return Poset::from_relation(n1 * n2, std::move(rel));
}

// Moebius function of a poset as a lazily memoized triangular table of exact
// integers.  mu(x,x) = 1 and mu(x,y) = -sum_{x < z <= y} mu(z,y).
class MobiusTable {
 public:
  explicit MobiusTable(const Poset& p)
      : poset_(&p), values_(p.size() * p.size()), known_(p.size() * p.size(), 0) {}

  const Poset& poset() const { return *poset_; }

  Int operator()(int x, int y) const {
    if (!poset_->leq(x, y)) return 0;
    std::lock_guard<std::mutex> lock(mtx_);
    return value_locked(x, y);
  }

 private:
  Int value_locked(int x, int y) const {
    const std::size_t n = poset_->size();
    std::size_t idx = static_cast<std::size_t>(x) * n + y;
    if (known_[idx]) return values_[idx];
    Int v;
    if (x == y) {
      v = 1;
    } else {
      v = 0;
      for (int z : poset_->interval(x, y))
        if (z != x) v -= value_locked(z, y);
    }
    values_[idx] = v;
    known_[idx] = 1;
    return v;
  }

  const Poset* poset_;
  mutable std::mutex mtx_;
  mutable std::vector<Int> values_;
  mutable std::vector<char> known_;
};

inline MobiusTable mobius(const Poset& p) { return MobiusTable(p); }

// Given g with g(x) = sum_{y <= x} f(y), recovers f by Moebius inversion:
// f(x) = sum_{y <= x} g(y) mu(y, x).  Works over any abelian value type with
// + and integer scaling.
template <typename Value>
std::vector<Value> mobius_invert(const std::vector<Value>& g, const Poset& p,
                                 const MobiusTable& mu) {
  if (g.size() != p.size()) throw invalid_input("mobius_invert: size mismatch");
  std::vector<Value> f(g.size(), Value(0));
  for (std::size_t x = 0; x < p.size(); ++x)
    for (int y : p.below(static_cast<int>(x)))
      f[x] += g[static_cast<std::size_t>(y)] *
              Value(mu(y, static_cast<int>(x)));
  return f;
}

template <typename Value>
std::vector<Value> mobius_invert(const std::vector<Value>& g, const Poset& p) {
  MobiusTable mu(p);
  return mobius_invert(g, p, mu);
}

// Down-summation, the inverse direction: g(x) = sum_{y <= x} f(y).
template <typename Value>
std::vector<Value> down_sum(const std::vector<Value>& f, const Poset& p) {
  if (f.size() != p.size()) throw invalid_input("down_sum: size mismatch");
  std::vector<Value> g(f.size(), Value(0));
  for (std::size_t x = 0; x < p.size(); ++x)
    for (int y : p.below(static_cast<int>(x)))
      g[x] += f[static_cast<std::size_t>(y)];
  return g;
}

}  // namespace mobchar
