#pragma once

#include <vector>

#include "mobchar/cyclotomic.hpp"
#include "mobchar/inverse_context.hpp"
#include "mobchar/semigroup.hpp"

namespace mobchar {

// Scalar-valued function on a semigroup.  Characters of genuine
// representations are flagged validated; arbitrary ("virtual") functions are
// not, and the multiplicity formulas skip integrality assertions for them.
class SemigroupCharacter {
 public:
  SemigroupCharacter(const Semigroup& s, std::vector<Cyclotomic> values,
                     bool validated)
      : sg_(&s), values_(std::move(values)), validated_(validated) {
    if (values_.size() != s.size())
      throw invalid_input("character values must cover every element");
    if (validated_) check_omega_law();
  }

  const Semigroup& owner() const { return *sg_; }
  const std::vector<Cyclotomic>& values() const { return values_; }
  const Cyclotomic& operator()(int x) const {
    return values_[static_cast<std::size_t>(x)];
  }
  bool validated() const { return validated_; }

  SemigroupCharacter operator+(const SemigroupCharacter& o) const {
    std::vector<Cyclotomic> v = values_;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.values_[i];
    return SemigroupCharacter(*sg_, std::move(v), validated_ && o.validated_);
  }

 private:
  // Characters satisfy theta(s) = theta(s^{omega+1}).
  void check_omega_law() const {
    for (int x = 0; x < static_cast<int>(sg_->size()); ++x) {
      auto [om, om1] = sg_->omega_power(x);
      (void)om;
      internal_check(values_[static_cast<std::size_t>(x)] ==
                         values_[static_cast<std::size_t>(om1)],
                     "character constant along s -> s^{omega+1}");
    }
  }

  const Semigroup* sg_;
  std::vector<Cyclotomic> values_;
  bool validated_;
};

// theta(x) = |Fix(x)|: the character of the rook matrix representation.
inline SemigroupCharacter fixed_point_character(const Semigroup& s) {
  if (!s.concrete())
    throw precondition_violation(
        "fixed-point character needs concrete partial permutations");
  std::vector<Cyclotomic> v;
  for (std::size_t i = 0; i < s.size(); ++i)
    v.push_back(Cyclotomic(
        Int(s.element(static_cast<int>(i)).fixed_points().size())));
  return SemigroupCharacter(s, std::move(v), true);
}

// Pointwise p-th power: the character of the p-th tensor power.
inline SemigroupCharacter power_character(const SemigroupCharacter& theta,
                                          unsigned p) {
  std::vector<Cyclotomic> v(theta.values().size(), Cyclotomic(1));
  for (unsigned i = 0; i < p; ++i)
    for (std::size_t x = 0; x < v.size(); ++x) v[x] *= theta.values()[x];
  return SemigroupCharacter(theta.owner(), std::move(v), theta.validated());
}

// theta^{wedge p}(x) = sum over p-subsets Y of dom x with Yx = Y of the sign
// of x restricted to Y.
inline SemigroupCharacter exterior_character(const Semigroup& s, unsigned p) {
  if (!s.concrete())
    throw precondition_violation(
        "exterior character needs concrete partial permutations");
  if (p > static_cast<unsigned>(s.degree()))
    throw invalid_input("exterior power exceeds the degree");
  std::vector<Cyclotomic> v(s.size(), Cyclotomic(0));
  for (std::size_t xi = 0; xi < s.size(); ++xi) {
    const PartialPerm& x = s.element(static_cast<int>(xi));
    std::vector<int> dom = x.domain();
    if (dom.size() < p) continue;
    std::vector<unsigned> pick(p);
    for (unsigned i = 0; i < p; ++i) pick[i] = i;
    Int acc = 0;
    while (true) {
      std::vector<int> y;
      for (unsigned i : pick) y.push_back(dom[i]);
      if (x.stabilizes(y)) acc += Int(x.sign_on(y));
      // next p-combination of dom
      if (p == 0) break;
      int pos = static_cast<int>(p) - 1;
      while (pos >= 0 &&
             pick[static_cast<unsigned>(pos)] ==
                 dom.size() - p + static_cast<unsigned>(pos))
        --pos;
      if (pos < 0) break;
      ++pick[static_cast<unsigned>(pos)];
      for (unsigned i = static_cast<unsigned>(pos) + 1; i < p; ++i)
        pick[i] = pick[i - 1] + 1;
    }
    v[xi] = Cyclotomic(acc);
  }
  return SemigroupCharacter(s, std::move(v), true);
}

// Unvalidated function wrapper (virtual characters, ad-hoc data).
inline SemigroupCharacter raw_character(const Semigroup& s,
                                        std::vector<Cyclotomic> values) {
  return SemigroupCharacter(s, std::move(values), false);
}

// theta_f(s) = theta(f s) as a function on all of S.
inline std::vector<Cyclotomic> restrict_character(const SemigroupCharacter& theta,
                                                  int f) {
  const Semigroup& s = theta.owner();
  std::vector<Cyclotomic> v(s.size());
  for (int x = 0; x < static_cast<int>(s.size()); ++x)
    v[static_cast<std::size_t>(x)] = theta(s.mul(f, x));
  return v;
}

// theta_f restricted to a maximal subgroup, indexed by subgroup elements.
inline std::vector<Cyclotomic> restrict_character(const SemigroupCharacter& theta,
                                                  int f,
                                                  const Subgroup& sub) {
  std::vector<Cyclotomic> v(sub.group.size());
  for (std::size_t i = 0; i < sub.group.size(); ++i)
    v[i] = theta(theta.owner().mul(f, sub.parent_of(static_cast<int>(i))));
  return v;
}

// h(s) = sum_{t <= s} theta(t) mu(t, s): the Moebius transform of theta
// along the natural order.
inline std::vector<Cyclotomic> h_function(const InverseContext& ctx,
                                          const SemigroupCharacter& theta) {
  return mobius_invert(theta.values(), ctx.order(), ctx.mu());
}

// Coefficients of the groupoid basis element: floor(x) = sum_{t <= x} t mu(t, x).
inline std::vector<Int> groupoid_coeffs(const InverseContext& ctx, int x) {
  std::vector<Int> v(ctx.semigroup().size(), 0);
  for (int t : ctx.order().below(x)) v[static_cast<std::size_t>(t)] = ctx.mu()(t, x);
  return v;
}

// Product in the semigroup algebra on dense coefficient vectors.
template <typename Value>
std::vector<Value> algebra_mul(const Semigroup& s, const std::vector<Value>& a,
                               const std::vector<Value>& b) {
  std::vector<Value> out(s.size(), Value(0));
  for (int i = 0; i < static_cast<int>(s.size()); ++i) {
    if (a[static_cast<std::size_t>(i)] == Value(0)) continue;
    for (int j = 0; j < static_cast<int>(s.size()); ++j) {
      if (b[static_cast<std::size_t>(j)] == Value(0)) continue;
      out[static_cast<std::size_t>(s.mul(i, j))] +=
          a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

}  // namespace mobchar
