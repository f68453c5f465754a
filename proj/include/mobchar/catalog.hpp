#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "mobchar/semigroup.hpp"
#include "mobchar/wreath.hpp"

namespace mobchar {

// The symmetric inverse monoid (rook monoid) of degree n, closed from a
// transposition, an n-cycle and a rank n-1 partial identity.
inline Semigroup rook_monoid(int n) {
  if (n < 1) throw invalid_input("rook monoid degree must be positive");
  if (n == 1)
    return Semigroup::closure(
        {PartialPerm::identity(1), PartialPerm::empty_map(1)});
  std::vector<PartialPerm> gens;
  std::vector<int> transp(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) transp[static_cast<std::size_t>(i)] = i;
  transp[0] = 1;
  transp[1] = 0;
  gens.emplace_back(transp);
  std::vector<int> cycle(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % n;
  gens.emplace_back(cycle);
  std::vector<int> pts;
  for (int i = 0; i < n - 1; ++i) pts.push_back(i);
  gens.push_back(PartialPerm::partial_identity(n, pts));
  return Semigroup::closure(gens);
}

// The Boolean lattice B_n as a meet semilattice of partial identities,
// elements ordered by subset bitmask.
inline Semigroup boolean_lattice(int n) {
  if (n < 0) throw invalid_input("boolean lattice requires n >= 0");
  if (n > 20) throw invalid_input("boolean lattice too large");
  std::vector<PartialPerm> elems;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> pts;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) pts.push_back(i);
    elems.push_back(PartialPerm::partial_identity(std::max(n, 1), pts));
  }
  return Semigroup::from_elements(elems);
}

inline Semigroup symmetric_group(int n) {
  if (n < 1) throw invalid_input("symmetric group degree must be positive");
  if (n == 1) return Semigroup::closure({PartialPerm::identity(1)});
  std::vector<PartialPerm> gens;
  std::vector<int> transp(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) transp[static_cast<std::size_t>(i)] = i;
  transp[0] = 1;
  transp[1] = 0;
  gens.emplace_back(transp);
  std::vector<int> cycle(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % n;
  gens.emplace_back(cycle);
  return Semigroup::closure(gens);
}

// Z/n as the permutation group generated by an n-cycle.
inline Semigroup cyclic_group(int n) {
  if (n < 1) throw invalid_input("cyclic group order must be positive");
  std::vector<int> cycle(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % n;
  return Semigroup::closure({PartialPerm(cycle)});
}

// All order-preserving partial permutations of [n] (POI_n): one increasing
// bijection per pair of equal-size subsets.
inline Semigroup order_preserving_partial(int n) {
  if (n < 1 || n > 12) throw invalid_input("POI_n supported for 1 <= n <= 12");
  std::vector<PartialPerm> elems;
  for (int k = 0; k <= n; ++k) {
    std::vector<unsigned> dom_masks, ran_masks;
    for (unsigned mask = 0; mask < (1u << n); ++mask)
      if (__builtin_popcount(mask) == k) dom_masks.push_back(mask);
    ran_masks = dom_masks;
    for (unsigned dm : dom_masks)
      for (unsigned rm : ran_masks) {
        std::vector<int> img(static_cast<std::size_t>(n), PartialPerm::kUndef);
        std::vector<int> dpts, rpts;
        for (int i = 0; i < n; ++i) {
          if (dm & (1u << i)) dpts.push_back(i);
          if (rm & (1u << i)) rpts.push_back(i);
        }
        for (int j = 0; j < k; ++j)
          img[static_cast<std::size_t>(dpts[static_cast<std::size_t>(j)])] =
              rpts[static_cast<std::size_t>(j)];
        elems.emplace_back(img);
      }
  }
  return Semigroup::from_elements(elems);
}

// Free left-regular band on k generators: nonempty sequences of distinct
// letters, product u v = u followed by the letters of v not already in u.
inline Semigroup free_lrb(int k) {
  if (k < 1 || k > 6) throw invalid_input("free LRB supported for 1 <= k <= 6");
  std::vector<std::vector<int>> words;
  std::vector<std::vector<int>> frontier;
  for (int a = 0; a < k; ++a) frontier.push_back({a});
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (auto& w : frontier) {
      words.push_back(w);
      for (int a = 0; a < k; ++a) {
        if (std::find(w.begin(), w.end(), a) != w.end()) continue;
        auto ext = w;
        ext.push_back(a);
        next.push_back(ext);
      }
    }
    frontier = std::move(next);
  }
  std::sort(words.begin(), words.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  auto index_of = [&](const std::vector<int>& w) {
    return static_cast<int>(std::find(words.begin(), words.end(), w) -
                            words.begin());
  };
  const std::size_t m = words.size();
  std::vector<int> table(m * m);
  std::vector<std::string> names;
  for (std::size_t a = 0; a < m; ++a) {
    std::string name;
    for (int c : words[a]) name += static_cast<char>('a' + c);
    names.push_back(name);
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<int> prod = words[a];
      for (int c : words[b])
        if (std::find(prod.begin(), prod.end(), c) == prod.end())
          prod.push_back(c);
      table[a * m + b] = index_of(prod);
    }
  }
  return Semigroup::from_table(m, std::move(table), std::move(names));
}

// Monogenic semigroup <x | x^{index+period} = x^{index}>.
inline Semigroup monogenic(int index, int period) {
  if (index < 1 || period < 1)
    throw invalid_input("monogenic semigroup needs index >= 1 and period >= 1");
  const int m = index + period - 1;
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  auto norm = [&](int exp) {  // exponent of x, 1-based
    if (exp <= m) return exp;
    return index + (exp - index) % period;
  };
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= m; ++b)
      table[static_cast<std::size_t>(a - 1) * m + (b - 1)] = norm(a + b) - 1;
  std::vector<std::string> names;
  for (int a = 1; a <= m; ++a) names.push_back("x^" + std::to_string(a));
  return Semigroup::from_table(static_cast<std::size_t>(m), std::move(table),
                               std::move(names));
}

// Parses "name:args" catalog specs, e.g. "rook:3", "wreath:2,rook:2",
// "monogenic:2,1".  Nested specs after "wreath:<m>," name the inner
// semigroup; the label group is Z/m.
inline Semigroup catalog(const std::string& spec,
                         std::size_t budget = Semigroup::kDefaultBudget) {
  auto colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto int_arg = [&](const std::string& a) {
    try {
      std::size_t used = 0;
      int v = std::stoi(a, &used);
      if (used != a.size()) throw std::invalid_argument(a);
      return v;
    } catch (const std::exception&) {
      throw invalid_input("catalog argument is not an integer: '" + a + "'");
    }
  };
  if (name == "rook") return rook_monoid(int_arg(args));
  if (name == "boolean_lattice" || name == "blat")
    return boolean_lattice(int_arg(args));
  if (name == "sym") return symmetric_group(int_arg(args));
  if (name == "cyclic") return cyclic_group(int_arg(args));
  if (name == "poi" || name == "order_preserving_partial")
    return order_preserving_partial(int_arg(args));
  if (name == "lrb" || name == "free_lrb") return free_lrb(int_arg(args));
  if (name == "monogenic") {
    auto comma = args.find(',');
    if (comma == std::string::npos)
      throw invalid_input("monogenic needs index,period");
    return monogenic(int_arg(args.substr(0, comma)),
                     int_arg(args.substr(comma + 1)));
  }
  if (name == "wreath") {
    auto comma = args.find(',');
    if (comma == std::string::npos)
      throw invalid_input("wreath needs <group order>,<inner catalog spec>");
    Semigroup label_group = cyclic_group(int_arg(args.substr(0, comma)));
    Semigroup inner = catalog(args.substr(comma + 1), budget);
    Semigroup w = wreath_product(label_group, inner);
    if (w.size() > budget)
      throw budget_exceeded("wreath product exceeds element budget", w.size());
    return w;
  }
  throw invalid_input(
      "unknown catalog name '" + name +
      "'; valid names: rook, boolean_lattice, sym, cyclic, poi, lrb, "
      "monogenic, wreath");
}

}  // namespace mobchar
