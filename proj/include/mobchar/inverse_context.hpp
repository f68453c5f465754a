#pragma once

#include <map>
#include <memory>
#include <vector>

#include "mobchar/group_character.hpp"
#include "mobchar/poset.hpp"
#include "mobchar/semigroup.hpp"

namespace mobchar {

// Precomputed structure of a finite inverse semigroup: inverses, natural
// order and its Moebius function, D-classes in a fixed linear extension of
// the <=_J order on classes (lower classes first), with a base idempotent,
// connectors and the character table of the maximal subgroup per class.
// Not movable: the Moebius table refers to the owned order poset.
class InverseContext {
 public:
  struct DClass {
    std::vector<int> elements;     // ascending
    std::vector<int> idempotents;  // E(D), ascending
    int base = -1;                 // e_i: first idempotent in element order
    std::map<int, int> connector;  // e -> p_e with dom p_e = e_i, ran p_e = e
    Subgroup subgroup;  // G_{e_i}
    GroupCharacterTable table;
  };

  explicit InverseContext(const Semigroup& s) : sg_(s) {
    if (!s.is_inverse())
      throw precondition_violation("analysis requires an inverse semigroup");
    inv_ = s.inverses();
    order_ = s.natural_order();
    mu_ = std::make_unique<MobiusTable>(order_);
    idem_ = s.idempotents();

    GreenData green = s.green_j();
    std::vector<int> block_order = green.j_order.topological_order();
    dclass_of_.assign(s.size(), -1);
    for (std::size_t pos = 0; pos < block_order.size(); ++pos) {
      DClass d;
      d.elements = green.classes[static_cast<std::size_t>(block_order[pos])];
      std::sort(d.elements.begin(), d.elements.end());
      for (int x : d.elements) {
        dclass_of_[static_cast<std::size_t>(x)] = static_cast<int>(pos);
        if (s.is_idempotent(x)) d.idempotents.push_back(x);
      }
      internal_check(!d.idempotents.empty(),
                     "every D-class of an inverse semigroup is regular");
      d.base = d.idempotents.front();
      for (int e : d.idempotents) {
        if (e == d.base) {
          d.connector[e] = d.base;
          continue;
        }
        for (int x : d.elements)
          if (dom(x) == d.base && ran(x) == e) {
            d.connector[e] = x;
            break;
          }
        internal_check(d.connector.count(e), "connector exists within D-class");
      }
      std::vector<int> members;
      for (int x : d.elements)
        if (dom(x) == d.base && ran(x) == d.base) members.push_back(x);
      d.subgroup = s.subsemigroup(members);
      d.table = character_table(d.subgroup.group);
      classes_.push_back(std::move(d));
    }

    Int total = 0;
    for (const DClass& d : classes_)
      total += Int(d.idempotents.size()) * Int(d.idempotents.size()) *
               Int(d.subgroup.group.size());
    internal_check(total == Int(s.size()),
                   "sum n_i^2 |G_i| equals the semigroup size");

    cyc_order_ = 1;
    for (const DClass& d : classes_) cyc_order_ = lcm_u(cyc_order_, d.table.exponent);
  }

  InverseContext(const InverseContext&) = delete;
  InverseContext& operator=(const InverseContext&) = delete;

  const Semigroup& semigroup() const { return sg_; }
  const std::vector<int>& inverses() const { return inv_; }
  int inverse(int x) const { return inv_[static_cast<std::size_t>(x)]; }
  const Poset& order() const { return order_; }
  const MobiusTable& mu() const { return *mu_; }
  const std::vector<int>& idempotents() const { return idem_; }
  const std::vector<DClass>& classes() const { return classes_; }
  const DClass& d_class(int i) const { return classes_[static_cast<std::size_t>(i)]; }
  int num_classes() const { return static_cast<int>(classes_.size()); }
  int class_of(int x) const { return dclass_of_[static_cast<std::size_t>(x)]; }
  unsigned cyclotomic_order() const { return cyc_order_; }

  int dom(int x) const { return sg_.mul(x, inv_[static_cast<std::size_t>(x)]); }
  int ran(int x) const { return sg_.mul(inv_[static_cast<std::size_t>(x)], x); }

  // For t with dom t = ran t: the local index in G_{e_i} of p_e t p_e^{-1},
  // where e = dom t and i is t's D-class.
  int conjugate_to_base(int t) const {
    const DClass& d = classes_[static_cast<std::size_t>(class_of(t))];
    int e = dom(t);
    internal_check(ran(t) == e, "conjugation needs dom = ran");
    int p = d.connector.at(e);
    int moved = sg_.mul(sg_.mul(p, t), inv_[static_cast<std::size_t>(p)]);
    int local = d.subgroup.local_of(moved);
    internal_check(local >= 0, "conjugated element lies in the base subgroup");
    return local;
  }

  // Total number of irreducible labels (= columns of the character table).
  int num_labels() const {
    int n = 0;
    for (const DClass& d : classes_) n += static_cast<int>(d.table.num_chars());
    return n;
  }

 private:
  const Semigroup& sg_;
  std::vector<int> inv_;
  Poset order_;
  std::unique_ptr<MobiusTable> mu_;
  std::vector<int> idem_;
  std::vector<DClass> classes_;
  std::vector<int> dclass_of_;
  unsigned cyc_order_ = 1;
};

}  // namespace mobchar
