#pragma once

#include <vector>

#include "mobchar/partial_perm.hpp"
#include "mobchar/semigroup.hpp"

namespace mobchar {

// Element (f, sigma) of G wr S for a finite group G given by its
// multiplication table: a carrier partial permutation together with a group
// label at each domain point.  Labels off the domain are normalized to the
// group identity so equality is structural.
class WreathElement {
 public:
  WreathElement(const Semigroup* group, PartialPerm carrier,
                std::vector<int> labels)
      : group_(group), carrier_(std::move(carrier)), labels_(std::move(labels)) {
    if (!group_->identity())
      throw invalid_input("wreath label group must have an identity");
    if (labels_.size() != static_cast<std::size_t>(carrier_.degree()))
      throw invalid_input("wreath labels must cover every point");
    for (int i = 0; i < carrier_.degree(); ++i) {
      if (!carrier_.defined(i)) {
        labels_[static_cast<std::size_t>(i)] = *group_->identity();
      } else if (labels_[static_cast<std::size_t>(i)] < 0 ||
                 static_cast<std::size_t>(labels_[static_cast<std::size_t>(i)]) >=
                     group_->size()) {
        throw invalid_input("wreath label out of range");
      }
    }
  }

  const Semigroup* group() const { return group_; }
  const PartialPerm& carrier() const { return carrier_; }
  int label(int i) const { return labels_[static_cast<std::size_t>(i)]; }

  // (g, i)(f, sigma) = (g f(i), i sigma): composite label at i is
  // label_x(i) * label_y(i * carrier_x).
  friend WreathElement wreath_compose(const WreathElement& x,
                                      const WreathElement& y) {
    if (x.group_ != y.group_ && x.group_->size() != y.group_->size())
      throw invalid_input("wreath composition requires a common label group");
    if (x.carrier_.degree() != y.carrier_.degree())
      throw invalid_input("wreath composition requires equal degrees");
    PartialPerm carrier = compose(x.carrier_, y.carrier_);
    std::vector<int> labels(static_cast<std::size_t>(carrier.degree()), 0);
    for (int i = 0; i < carrier.degree(); ++i)
      if (carrier.defined(i))
        labels[static_cast<std::size_t>(i)] = x.group_->mul(
            x.label(i), y.label(x.carrier_.apply(i)));
    return WreathElement(x.group_, std::move(carrier), std::move(labels));
  }

  friend bool operator==(const WreathElement& a, const WreathElement& b) {
    return a.carrier_ == b.carrier_ && a.labels_ == b.labels_;
  }

  // Embedding into the partial permutations of G x [n], point (g, i) encoded
  // as g * n + i; (g, i) maps to (g * label(i), i * carrier).
  PartialPerm embedded() const {
    const int n = carrier_.degree();
    const int gn = static_cast<int>(group_->size());
    std::vector<int> img(static_cast<std::size_t>(gn * n), PartialPerm::kUndef);
    for (int g = 0; g < gn; ++g)
      for (int i = 0; i < n; ++i)
        if (carrier_.defined(i))
          img[static_cast<std::size_t>(g * n + i)] =
              group_->mul(g, label(i)) * n + carrier_.apply(i);
    return PartialPerm(std::move(img));
  }

 private:
  const Semigroup* group_;
  PartialPerm carrier_;
  std::vector<int> labels_;
};

// The full wreath product G wr S as a concrete semigroup of degree |G| * n,
// enumerated element by element: every carrier in S with every label
// assignment on its domain.  Element order follows S's element order, labels
// in lexicographic order over the (ascending) domain.
inline Semigroup wreath_product(const Semigroup& group, const Semigroup& s) {
  if (!s.concrete())
    throw invalid_input("wreath product requires a concrete inner semigroup");
  std::vector<PartialPerm> elements;
  const int n = s.degree();
  for (std::size_t si = 0; si < s.size(); ++si) {
    const PartialPerm& carrier = s.element(static_cast<int>(si));
    std::vector<int> dom = carrier.domain();
    std::vector<int> assign(dom.size(), 0);
    bool done = false;
    while (!done) {
      std::vector<int> labels(static_cast<std::size_t>(n), 0);
      for (std::size_t k = 0; k < dom.size(); ++k)
        labels[static_cast<std::size_t>(dom[k])] = assign[k];
      elements.push_back(WreathElement(&group, carrier, labels).embedded());
      done = true;
      for (std::size_t pos = dom.size(); pos-- > 0;) {
        if (++assign[pos] < static_cast<int>(group.size())) {
          done = false;
          break;
        }
        assign[pos] = 0;
      }
    }
  }
  return Semigroup::from_elements(elements);
}

}  // namespace mobchar
