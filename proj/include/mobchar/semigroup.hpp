#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "mobchar/partial_perm.hpp"
#include "mobchar/poset.hpp"

namespace mobchar {

class Semigroup;
struct Subgroup;

// J-classes with the <=_J order and regularity flags.
struct GreenData {
  std::vector<int> class_of;                // element -> class id
  std::vector<std::vector<int>> classes;    // class id -> sorted elements
  Poset j_order;                            // on class ids
  std::vector<char> regular;                // class id -> contains an idempotent
};

// Closed multiplication-table semigroup.  Elements are either concrete
// partial permutations or abstract ids with a supplied table; element
// identity is the table index.  Immutable after construction.
class Semigroup {
 public:
  static constexpr std::size_t kDefaultBudget = 100000;

  // Breadth-first product closure.  Element order: generators first
  // (deduplicated, input order), then discovery order.
  static Semigroup closure(const std::vector<PartialPerm>& generators,
                           std::size_t cap = kDefaultBudget) {
    if (generators.empty())
      throw invalid_input("closure requires at least one generator");
    const int degree = generators.front().degree();
    for (const auto& g : generators)
      if (g.degree() != degree)
        throw invalid_input("closure generators must have uniform degree");

    Semigroup s;
    s.degree_ = degree;
    std::unordered_map<PartialPerm, int, PartialPermHash> index;
    auto add = [&](const PartialPerm& p) -> int {
      auto it = index.find(p);
      if (it != index.end()) return it->second;
      if (s.elems_.size() >= cap)
        throw budget_exceeded("closure exceeded element budget of " +
                                  std::to_string(cap),
                              s.elems_.size());
      int id = static_cast<int>(s.elems_.size());
      s.elems_.push_back(p);
      index.emplace(p, id);
      return id;
    };
    for (const auto& g : generators) add(g);
    std::size_t gen_count = s.elems_.size();
    for (std::size_t head = 0; head < s.elems_.size(); ++head)
      for (std::size_t gi = 0; gi < gen_count; ++gi)
        add(compose(s.elems_[head], s.elems_[gi]));

    s.build_concrete_table(index);
    return s;
  }

  // Closed set of concrete elements (deduplicated; given order kept).
  static Semigroup from_elements(const std::vector<PartialPerm>& elements) {
    if (elements.empty()) throw invalid_input("semigroup must be nonempty");
    Semigroup s;
    s.degree_ = elements.front().degree();
    std::unordered_map<PartialPerm, int, PartialPermHash> index;
    for (const auto& e : elements) {
      if (e.degree() != s.degree_)
        throw invalid_input("elements must have uniform degree");
      if (index.emplace(e, static_cast<int>(s.elems_.size())).second)
        s.elems_.push_back(e);
    }
    s.build_concrete_table(index);
    return s;
  }

  // Abstract table; 0-based entries.  Associativity is verified exhaustively
  // up to 200 elements and on 10^6 sampled triples above.
  static Semigroup from_table(std::size_t m, std::vector<int> table,
                              std::vector<std::string> names = {}) {
    if (m == 0) throw invalid_input("semigroup must be nonempty");
    if (table.size() != m * m) throw invalid_input("table size mismatch");
    for (int v : table)
      if (v < 0 || static_cast<std::size_t>(v) >= m)
        throw invalid_input("table entry out of range");
    Semigroup s;
    s.table_ = std::move(table);
    s.m_ = m;
    s.names_ = std::move(names);
    if (!s.names_.empty() && s.names_.size() != m)
      throw invalid_input("name table size mismatch");
    s.verify_associativity();
    s.find_identity();
    return s;
  }

  std::size_t size() const { return m_; }
  int mul(int a, int b) const {
    return table_[static_cast<std::size_t>(a) * m_ + b];
  }
  bool concrete() const { return !elems_.empty(); }
  int degree() const { return degree_; }
  const PartialPerm& element(int i) const {
    if (!concrete()) throw invalid_input("semigroup has no concrete elements");
    return elems_[static_cast<std::size_t>(i)];
  }
  const std::vector<PartialPerm>& elements() const { return elems_; }
  std::optional<int> identity() const { return identity_; }

  std::string element_name(int i) const {
    if (concrete()) return elems_[static_cast<std::size_t>(i)].str();
    if (!names_.empty()) return names_[static_cast<std::size_t>(i)];
    return "s" + std::to_string(i + 1);
  }

  int index_of(const PartialPerm& p) const {
    for (std::size_t i = 0; i < elems_.size(); ++i)
      if (elems_[i] == p) return static_cast<int>(i);
    return -1;
  }

  bool is_idempotent(int x) const { return mul(x, x) == x; }

  std::vector<int> idempotents() const {
    std::vector<int> e;
    for (int x = 0; x < static_cast<int>(m_); ++x)
      if (is_idempotent(x)) e.push_back(x);
    return e;
  }

  int power(int x, unsigned long k) const {
    if (k == 0) throw invalid_input("semigroup power requires exponent >= 1");
    int acc = x;
    for (unsigned long i = 1; i < k; ++i) acc = mul(acc, x);
    return acc;
  }

  // (x^omega, x^{omega+1}): the unique idempotent power and its successor in
  // the cyclic subsemigroup generated by x.
  std::pair<int, int> omega_power(int x) const {
    int p = x;
    for (std::size_t steps = 0; steps <= m_; ++steps) {
      if (is_idempotent(p)) return {p, mul(x, p)};
      p = mul(p, x);
    }
    throw internal_check_failure("no idempotent power found");
  }

  bool is_regular_elem(int x) const {
    for (int t = 0; t < static_cast<int>(m_); ++t)
      if (mul(mul(x, t), x) == x) return true;
    return false;
  }

  std::vector<int> regular_elements() const {
    std::vector<int> r;
    for (int x = 0; x < static_cast<int>(m_); ++x)
      if (is_regular_elem(x)) r.push_back(x);
    return r;
  }

  bool idempotents_commute() const {
    auto e = idempotents();
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j)
        if (mul(e[i], e[j]) != mul(e[j], e[i])) return false;
    return true;
  }

  // Regular with commuting idempotents.
  bool is_inverse() const {
    if (!idempotents_commute()) return false;
    for (int x = 0; x < static_cast<int>(m_); ++x)
      if (!is_regular_elem(x)) return false;
    return true;
  }

  // For an inverse semigroup: inverse_of[x] is the unique y with xyx = x and
  // yxy = y.
  std::vector<int> inverses() const {
    std::vector<int> inv(m_, -1);
    for (int x = 0; x < static_cast<int>(m_); ++x) {
      for (int t = 0; t < static_cast<int>(m_); ++t) {
        if (mul(mul(x, t), x) == x && mul(mul(t, x), t) == t) {
          if (inv[static_cast<std::size_t>(x)] != -1)
            throw precondition_violation("element has multiple inverses");
          inv[static_cast<std::size_t>(x)] = t;
        }
      }
      if (inv[static_cast<std::size_t>(x)] == -1)
        throw precondition_violation("element has no inverse");
    }
    return inv;
  }

  // J-classes via mutual principal-ideal containment, as strongly connected
  // components of the two-sided translation graph.
  GreenData green_j() const {
    const int m = static_cast<int>(m_);
    std::vector<std::vector<int>> adj(m_);
    for (int x = 0; x < m; ++x) {
      std::vector<char> seen(m_, 0);
      seen[static_cast<std::size_t>(x)] = 0;
      for (int u = 0; u < m; ++u) {
        int a = mul(u, x), b = mul(x, u);
        if (!seen[static_cast<std::size_t>(a)]) {
          seen[static_cast<std::size_t>(a)] = 1;
          adj[static_cast<std::size_t>(x)].push_back(a);
        }
        if (!seen[static_cast<std::size_t>(b)]) {
          seen[static_cast<std::size_t>(b)] = 1;
          adj[static_cast<std::size_t>(x)].push_back(b);
        }
      }
    }
    std::vector<int> comp = scc(adj);
    int k = *std::max_element(comp.begin(), comp.end()) + 1;

    GreenData g;
    g.class_of = comp;
    g.classes.assign(static_cast<std::size_t>(k), {});
    for (int x = 0; x < m; ++x)
      g.classes[static_cast<std::size_t>(comp[static_cast<std::size_t>(x)])]
          .push_back(x);

    // class(t) <= class(s) iff t in S^1 s S^1: propagate reachability.
    std::vector<char> rel(static_cast<std::size_t>(k) * k, 0);
    for (int x = 0; x < m; ++x) {
      int cx = comp[static_cast<std::size_t>(x)];
      for (int y : adj[static_cast<std::size_t>(x)])
        rel[static_cast<std::size_t>(comp[static_cast<std::size_t>(y)]) * k + cx] = 1;
    }
    for (int i = 0; i < k; ++i) rel[static_cast<std::size_t>(i) * k + i] = 1;
    g.j_order = Poset::from_relation(static_cast<std::size_t>(k),
                                     std::move(rel));

    g.regular.assign(static_cast<std::size_t>(k), 0);
    for (int e : idempotents())
      g.regular[static_cast<std::size_t>(comp[static_cast<std::size_t>(e)])] = 1;
    return g;
  }

  // Natural partial order of an inverse semigroup: s <= t iff s = (ss^{-1})t.
  Poset natural_order() const {
    if (!is_inverse())
      throw precondition_violation("natural order requires an inverse semigroup");
    auto inv = inverses();
    std::vector<char> rel(m_ * m_, 0);
    for (int s = 0; s < static_cast<int>(m_); ++s) {
      int dom = mul(s, inv[static_cast<std::size_t>(s)]);
      for (int t = 0; t < static_cast<int>(m_); ++t)
        if (mul(dom, t) == s) rel[static_cast<std::size_t>(s) * m_ + t] = 1;
    }
    return Poset::from_relation(m_, std::move(rel));
  }

  // Maximal subgroup at the idempotent e: the group of units of eSe.
  Subgroup maximal_subgroup(int e) const;

  // Restriction to a product-closed element subset, preserving concreteness.
  Subgroup subsemigroup(const std::vector<int>& members) const;

  // S^1 x for x in a <=_J-minimal J-class; minimality re-verified.
  std::vector<int> minimal_left_ideal() const {
    GreenData g = green_j();
    int min_class = -1;
    for (int c = 0; c < static_cast<int>(g.classes.size()); ++c) {
      bool minimal = true;
      for (int d = 0; d < static_cast<int>(g.classes.size()); ++d)
        if (d != c && g.j_order.leq(d, c)) {
          minimal = false;
          break;
        }
      if (minimal) {
        min_class = c;
        break;
      }
    }
    internal_check(min_class >= 0, "finite semigroup has a minimal J-class");
    int x = g.classes[static_cast<std::size_t>(min_class)].front();
    auto left_ideal = [&](int y) {
      std::vector<char> in(m_, 0);
      in[static_cast<std::size_t>(y)] = 1;
      for (int s = 0; s < static_cast<int>(m_); ++s)
        in[static_cast<std::size_t>(mul(s, y))] = 1;
      std::vector<int> out;
      for (int i = 0; i < static_cast<int>(m_); ++i)
        if (in[static_cast<std::size_t>(i)]) out.push_back(i);
      return out;
    };
    std::vector<int> ideal = left_ideal(x);
    for (int y : ideal)
      internal_check(left_ideal(y) == ideal, "minimal left ideal minimality");
    return ideal;
  }

  // DA: every regular element is idempotent.
  bool is_da() const {
    for (int x = 0; x < static_cast<int>(m_); ++x)
      if (is_regular_elem(x) && !is_idempotent(x)) return false;
    return true;
  }

  bool is_commuting_idem() const { return idempotents_commute(); }

  // Faithfully representable by complex upper triangular matrices: abelian
  // maximal subgroups, aperiodic idempotent-generated subsemigroup, and
  // x^{omega+1} = x for every regular x.
  bool is_triangularizable() const;

  std::vector<int> idempotent_generated() const {
    std::vector<int> members = idempotents();
    std::vector<char> in(m_, 0);
    for (int e : members) in[static_cast<std::size_t>(e)] = 1;
    std::size_t gen_count = members.size();
    for (std::size_t head = 0; head < members.size(); ++head)
      for (std::size_t gi = 0; gi < gen_count; ++gi) {
        int p = mul(members[head], members[static_cast<std::size_t>(gi)]);
        if (!in[static_cast<std::size_t>(p)]) {
          in[static_cast<std::size_t>(p)] = 1;
          members.push_back(p);
        }
      }
    std::sort(members.begin(), members.end());
    return members;
  }

  // S^1: unchanged if a two-sided identity exists, else one appended at the
  // end (concrete semigroups receive the full identity of their degree).
  Semigroup with_identity() const {
    if (identity_) return *this;
    if (concrete()) {
      std::vector<PartialPerm> ext = elems_;
      ext.push_back(PartialPerm::identity(degree_));
      return from_elements(ext);
    }
    const std::size_t m = m_ + 1;
    std::vector<int> table(m * m);
    for (std::size_t a = 0; a < m_; ++a)
      for (std::size_t b = 0; b < m_; ++b)
        table[a * m + b] = table_[a * m_ + b];
    for (std::size_t a = 0; a < m; ++a) {
      table[a * m + m_] = static_cast<int>(a);
      table[m_ * m + a] = static_cast<int>(a);
    }
    std::vector<std::string> names;
    if (!names_.empty()) {
      names = names_;
      names.push_back("1");
    }
    return from_table(m, std::move(table), std::move(names));
  }

 private:
  void build_concrete_table(
      const std::unordered_map<PartialPerm, int, PartialPermHash>& index) {
    m_ = elems_.size();
    table_.assign(m_ * m_, -1);
    for (std::size_t a = 0; a < m_; ++a)
      for (std::size_t b = 0; b < m_; ++b) {
        auto it = index.find(compose(elems_[a], elems_[b]));
        if (it == index.end())
          throw invalid_input("element set is not closed under composition");
        table_[a * m_ + b] = it->second;
      }
    find_identity();
  }

  void find_identity() {
    identity_.reset();
    for (int e = 0; e < static_cast<int>(m_); ++e) {
      bool ok = true;
      for (int x = 0; x < static_cast<int>(m_) && ok; ++x)
        ok = mul(e, x) == x && mul(x, e) == x;
      if (ok) {
        identity_ = e;
        return;
      }
    }
  }

  void verify_associativity() const {
    const int m = static_cast<int>(m_);
    if (m_ <= 200) {
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          for (int c = 0; c < m; ++c)
            if (mul(mul(a, b), c) != mul(a, mul(b, c)))
              throw invalid_input("multiplication table is not associative");
      return;
    }
    std::mt19937_64 rng(0x5eed5eedULL);
    std::uniform_int_distribution<int> pick(0, m - 1);
    for (int i = 0; i < 1000000; ++i) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      if (mul(mul(a, b), c) != mul(a, mul(b, c)))
        throw invalid_input("multiplication table is not associative");
    }
  }

  // Tarjan strongly connected components; returns component ids.
  static std::vector<int> scc(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> comp(static_cast<std::size_t>(n), -1),
        low(static_cast<std::size_t>(n), 0), num(static_cast<std::size_t>(n), -1);
    std::vector<int> stack;
    std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
    int counter = 0, comp_count = 0;
    // Iterative DFS to avoid deep recursion.
    struct Frame {
      int v;
      std::size_t edge;
    };
    for (int root = 0; root < n; ++root) {
      if (num[static_cast<std::size_t>(root)] != -1) continue;
      std::vector<Frame> frames{{root, 0}};
      num[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = counter++;
      stack.push_back(root);
      on_stack[static_cast<std::size_t>(root)] = 1;
      while (!frames.empty()) {
        Frame& f = frames.back();
        if (f.edge < adj[static_cast<std::size_t>(f.v)].size()) {
          int w = adj[static_cast<std::size_t>(f.v)][f.edge++];
          if (num[static_cast<std::size_t>(w)] == -1) {
            num[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = counter++;
            stack.push_back(w);
            on_stack[static_cast<std::size_t>(w)] = 1;
            frames.push_back({w, 0});
          } else if (on_stack[static_cast<std::size_t>(w)]) {
            low[static_cast<std::size_t>(f.v)] =
                std::min(low[static_cast<std::size_t>(f.v)], num[static_cast<std::size_t>(w)]);
          }
        } else {
          int v = f.v;
          frames.pop_back();
          if (!frames.empty())
            low[static_cast<std::size_t>(frames.back().v)] = std::min(
                low[static_cast<std::size_t>(frames.back().v)], low[static_cast<std::size_t>(v)]);
          if (low[static_cast<std::size_t>(v)] == num[static_cast<std::size_t>(v)]) {
            while (true) {
              int w = stack.back();
              stack.pop_back();
              on_stack[static_cast<std::size_t>(w)] = 0;
              comp[static_cast<std::size_t>(w)] = comp_count;
              if (w == v) break;
            }
            ++comp_count;
          }
        }
      }
    }
    return comp;
  }

  std::vector<PartialPerm> elems_;
  std::vector<std::string> names_;
  int degree_ = 0;
  std::size_t m_ = 0;
  std::vector<int> table_;
  std::optional<int> identity_;

  friend struct Subgroup;
  friend Subgroup make_subsemigroup(const Semigroup&, const std::vector<int>&);
};

// A subsemigroup together with the index map back into its parent.
struct Subgroup {
  Semigroup group;
  std::vector<int> parent_index;
  int identity_parent = -1;

  int parent_of(int i) const { return parent_index[static_cast<std::size_t>(i)]; }
  int local_of(int parent) const {
    for (std::size_t i = 0; i < parent_index.size(); ++i)
      if (parent_index[i] == parent) return static_cast<int>(i);
    return -1;
  }
};

inline Subgroup make_subsemigroup(const Semigroup& s,
                                  const std::vector<int>& members) {
  Subgroup sub;
  sub.parent_index = members;
  std::vector<int> local_of(s.m_, -1);
  for (std::size_t i = 0; i < members.size(); ++i)
    local_of[static_cast<std::size_t>(members[i])] = static_cast<int>(i);
  const std::size_t k = members.size();
  Semigroup g;
  g.m_ = k;
  g.table_.assign(k * k, -1);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      int prod = s.mul(members[i], members[j]);
      int loc = local_of[static_cast<std::size_t>(prod)];
      if (loc < 0) throw invalid_input("subsemigroup member set is not closed");
      g.table_[i * k + j] = loc;
    }
  if (s.concrete()) {
    g.degree_ = s.degree_;
    for (int p : members)
      g.elems_.push_back(s.elems_[static_cast<std::size_t>(p)]);
  } else if (!s.names_.empty()) {
    for (int p : members)
      g.names_.push_back(s.names_[static_cast<std::size_t>(p)]);
  }
  g.find_identity();
  sub.group = std::move(g);
  if (sub.group.identity())
    sub.identity_parent = members[static_cast<std::size_t>(*sub.group.identity())];
  return sub;
}

inline bool Semigroup::is_triangularizable() const {
  for (int e : idempotents()) {
    Subgroup g = maximal_subgroup(e);
    for (std::size_t a = 0; a < g.group.size(); ++a)
      for (std::size_t b = a + 1; b < g.group.size(); ++b)
        if (g.group.mul(static_cast<int>(a), static_cast<int>(b)) !=
            g.group.mul(static_cast<int>(b), static_cast<int>(a)))
          return false;
  }
  for (int x : idempotent_generated()) {
    auto [om, om1] = omega_power(x);
    if (om != om1) return false;  // nontrivial subgroup inside <E(S)>
  }
  for (int x = 0; x < static_cast<int>(m_); ++x)
    if (is_regular_elem(x) && omega_power(x).second != x) return false;
  return true;
}

inline Subgroup Semigroup::subsemigroup(const std::vector<int>& members) const {
  return make_subsemigroup(*this, members);
}

inline Subgroup Semigroup::maximal_subgroup(int e) const {
  if (!is_idempotent(e))
    throw precondition_violation("maximal subgroup requires an idempotent");
  std::vector<int> local;
  std::vector<char> in_local(m_, 0);
  for (int x = 0; x < static_cast<int>(m_); ++x) {
    int y = mul(mul(e, x), e);
    if (!in_local[static_cast<std::size_t>(y)]) {
      in_local[static_cast<std::size_t>(y)] = 1;
      local.push_back(y);
    }
  }
  std::sort(local.begin(), local.end());
  std::vector<int> units;
  for (int u : local) {
    bool unit = false;
    for (int v : local)
      if (mul(u, v) == e && mul(v, u) == e) {
        unit = true;
        break;
      }
    if (unit) units.push_back(u);
  }
  return subsemigroup(units);
}

}  // namespace mobchar
