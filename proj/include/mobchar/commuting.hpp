#pragma once

#include <memory>
#include <vector>

#include "mobchar/multiplicity.hpp"

namespace mobchar {

// Reduction of a semigroup with commuting idempotents to its inverse
// semigroup of regular elements: R(S), the down-sets s^down, and the algebra
// retraction nu(s) = sum_{t in s^down} floor(t), materialized as exact
// integer coefficient vectors over R(S).
class RegularReduction {
 public:
  explicit RegularReduction(const Semigroup& s) : sg_(s) {
    if (!s.idempotents_commute())
      throw precondition_violation(
          "regular reduction requires commuting idempotents");
    regulars_ = s.regular_elements();
    r_sub_ = s.subsemigroup(regulars_);  // closed by Prop: (ab)^{-1}=b^{-1}a^{-1}
    r_ctx_ = std::make_unique<InverseContext>(r_sub_.group);

    local_of_.assign(s.size(), -1);
    for (std::size_t i = 0; i < regulars_.size(); ++i)
      local_of_[static_cast<std::size_t>(regulars_[i])] = static_cast<int>(i);

    // s^down = {u in R(S) : u u^{-1} s = u}, equivalently s u^{-1} u = u.
    down_sets_.resize(s.size());
    nu_.assign(s.size(), std::vector<Int>(regulars_.size(), 0));
    for (int x = 0; x < static_cast<int>(s.size()); ++x) {
      for (std::size_t ul = 0; ul < regulars_.size(); ++ul) {
        int u = regulars_[ul];
        int u_inv = regulars_[static_cast<std::size_t>(
            r_ctx_->inverse(static_cast<int>(ul)))];
        bool left = s.mul(s.mul(u, u_inv), x) == u;
        bool right = s.mul(x, s.mul(u_inv, u)) == u;
        internal_check(left == right, "the two down-set conditions agree");
        if (left) {
          down_sets_[static_cast<std::size_t>(x)].push_back(u);
          // expand floor(u) in the element basis of R(S)
          std::vector<Int> fl = groupoid_coeffs(*r_ctx_, static_cast<int>(ul));
          for (std::size_t j = 0; j < fl.size(); ++j)
            nu_[static_cast<std::size_t>(x)][j] += fl[j];
        }
      }
    }

    // nu is the identity on R(S) and multiplicative on all of S.
    for (std::size_t ul = 0; ul < regulars_.size(); ++ul) {
      std::vector<Int> expect(regulars_.size(), 0);
      expect[ul] = 1;
      internal_check(nu_[static_cast<std::size_t>(regulars_[ul])] == expect,
                     "nu restricts to the identity on R(S)");
    }
    for (int x = 0; x < static_cast<int>(s.size()); ++x)
      for (int y = 0; y < static_cast<int>(s.size()); ++y) {
        std::vector<Int> lhs = nu_[static_cast<std::size_t>(s.mul(x, y))];
        std::vector<Int> rhs = algebra_mul(r_sub_.group,
                                           nu_[static_cast<std::size_t>(x)],
                                           nu_[static_cast<std::size_t>(y)]);
        internal_check(lhs == rhs, "nu is multiplicative");
      }
  }

  const Semigroup& source() const { return sg_; }
  const std::vector<int>& regulars() const { return regulars_; }
  const Subgroup& regular_sub() const { return r_sub_; }
  const InverseContext& regular_context() const { return *r_ctx_; }
  const std::vector<int>& down_set(int x) const {
    return down_sets_[static_cast<std::size_t>(x)];
  }
  // nu(x) over R(S)-local element indices.
  const std::vector<Int>& nu(int x) const {
    return nu_[static_cast<std::size_t>(x)];
  }
  int local_of(int parent) const {
    return local_of_[static_cast<std::size_t>(parent)];
  }

 private:
  const Semigroup& sg_;
  std::vector<int> regulars_;
  Subgroup r_sub_;
  std::unique_ptr<InverseContext> r_ctx_;
  std::vector<std::vector<int>> down_sets_;
  std::vector<std::vector<Int>> nu_;
  std::vector<int> local_of_;
};

// Basis {s - nu(s) : s not regular} of the radical of the semigroup algebra
// in characteristic zero, as coefficient vectors over the source elements.
struct RadicalBasis {
  std::vector<int> nonregular;               // the s indexing each vector
  std::vector<std::vector<Rational>> basis;  // over source elements
  std::size_t dim = 0;
  std::size_t nilpotency_exponent = 0;  // least k with (span)^k = 0
};

namespace detail {

// Row space dimension over the rationals; rows reduced in place.
inline std::size_t row_rank(std::vector<std::vector<Rational>>& rows) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  const std::size_t n = rows[0].size();
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[rank]);
    Rational inv = Rational(1) / rows[rank][col];
    for (std::size_t j = col; j < n; ++j) rows[rank][j] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rational f = rows[r][col];
      for (std::size_t j = col; j < n; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  rows.resize(rank);
  return rank;
}

}  // namespace detail

inline RadicalBasis radical_basis(const RegularReduction& rr) {
  const Semigroup& s = rr.source();
  RadicalBasis out;
  for (int x = 0; x < static_cast<int>(s.size()); ++x) {
    if (rr.local_of(x) >= 0) continue;
    std::vector<Rational> v(s.size(), Rational(0));
    v[static_cast<std::size_t>(x)] = 1;
    const std::vector<Int>& nu = rr.nu(x);
    for (std::size_t j = 0; j < nu.size(); ++j)
      v[static_cast<std::size_t>(rr.regulars()[j])] -= Rational(nu[j]);
    out.nonregular.push_back(x);
    out.basis.push_back(std::move(v));
  }
  out.dim = out.basis.size();

  // Verify independence and nilpotency by explicit multiplication: iterate
  // V_{k+1} = span{v b : v in V_k, b in basis} until it vanishes.
  {
    auto rows = out.basis;
    internal_check(detail::row_rank(rows) == out.dim,
                   "radical basis is linearly independent");
  }
  std::vector<std::vector<Rational>> current = out.basis;
  std::size_t exponent = 1;
  while (!current.empty()) {
    internal_check(exponent <= s.size(), "radical nilpotency within |S| steps");
    std::vector<std::vector<Rational>> next;
    for (const auto& v : current)
      for (const auto& b : out.basis) {
        std::vector<Rational> prod = algebra_mul(s, v, b);
        bool nonzero = std::any_of(prod.begin(), prod.end(),
                                   [](const Rational& q) { return q != 0; });
        if (nonzero) next.push_back(std::move(prod));
      }
    detail::row_rank(next);
    current = std::move(next);
    ++exponent;
  }
  out.nilpotency_exponent = exponent;
  return out;
}

// Multiplicity of the irreducible attached to (e, chi) in a character theta
// of a commuting-idempotent semigroup:
// m = sum_{f <= e in E(S)} (chi, theta_f)_{G_e} mu(f, e), with mu taken on
// the semilattice E(S).
inline Cyclotomic mult_commuting(const RegularReduction& rr, int e,
                                 const std::vector<Cyclotomic>& chi,
                                 const std::vector<int>& chi_inverses,
                                 const Subgroup& sub,
                                 const SemigroupCharacter& theta) {
  const Semigroup& s = rr.source();
  if (!s.is_idempotent(e))
    throw precondition_violation("multiplicity anchor must be an idempotent");
  std::vector<int> idem = s.idempotents();
  // E(S) is a semilattice under f <= e iff fe = f.
  std::vector<char> rel(idem.size() * idem.size(), 0);
  for (std::size_t a = 0; a < idem.size(); ++a)
    for (std::size_t b = 0; b < idem.size(); ++b)
      if (s.mul(idem[a], idem[b]) == idem[a]) rel[a * idem.size() + b] = 1;
  Poset ep = Poset::from_relation(idem.size(), std::move(rel));
  MobiusTable mu(ep);
  int e_pos = static_cast<int>(
      std::find(idem.begin(), idem.end(), e) - idem.begin());

  Cyclotomic total(0);
  for (std::size_t fp = 0; fp < idem.size(); ++fp) {
    if (!ep.leq(static_cast<int>(fp), e_pos)) continue;
    Int m = mu(static_cast<int>(fp), e_pos);
    if (m == 0) continue;
    Cyclotomic form(0);
    for (std::size_t g = 0; g < sub.group.size(); ++g)
      form += chi[static_cast<std::size_t>(chi_inverses[g])] *
              theta(s.mul(idem[fp], sub.parent_of(static_cast<int>(g))));
    total += form * Cyclotomic(Rational(m, Int(sub.group.size())));
  }
  if (theta.validated())
    internal_check(total.is_rational() && is_integral(total.rational_value()) &&
                       total.rational_value() >= 0,
                   "commuting-idempotent multiplicity is a nonnegative integer");
  return total;
}

// Multiplicity of the degree-one representation rho_J (value 1 above J in
// the <=_J order, 0 elsewhere) in a representation of a DA semigroup given
// through the rank of its images: sum over regular J' <= J of
// rk(phi(e_{J'} e_J e_{J'})) mu(J', J) on the semilattice of regular
// J-classes.
inline Int da_multiplicity(const Semigroup& s,
                           const std::function<Int(int)>& rank_of_element,
                           int j_class) {
  if (!s.is_da())
    throw precondition_violation("DA multiplicity requires a DA semigroup");
  GreenData green = s.green_j();
  std::vector<int> reg;  // regular class ids
  for (int c = 0; c < static_cast<int>(green.classes.size()); ++c)
    if (green.regular[static_cast<std::size_t>(c)]) reg.push_back(c);
  auto pos_of = [&](int cls) {
    auto it = std::find(reg.begin(), reg.end(), cls);
    return it == reg.end() ? -1 : static_cast<int>(it - reg.begin());
  };
  int j_pos = pos_of(j_class);
  if (j_pos < 0)
    throw precondition_violation("target J-class must be regular");
  std::vector<char> rel(reg.size() * reg.size(), 0);
  for (std::size_t a = 0; a < reg.size(); ++a)
    for (std::size_t b = 0; b < reg.size(); ++b)
      if (green.j_order.leq(reg[a], reg[b])) rel[a * reg.size() + b] = 1;
  Poset up = Poset::from_relation(reg.size(), std::move(rel));
  MobiusTable mu(up);

  // Transversal: first idempotent per regular class.
  std::vector<int> e_of(reg.size(), -1);
  for (int e : s.idempotents()) {
    int pos = pos_of(green.class_of[static_cast<std::size_t>(e)]);
    if (pos >= 0 && e_of[static_cast<std::size_t>(pos)] < 0)
      e_of[static_cast<std::size_t>(pos)] = e;
  }

  Int total = 0;
  for (std::size_t jp = 0; jp < reg.size(); ++jp) {
    if (!up.leq(static_cast<int>(jp), j_pos)) continue;
    Int m = mu(static_cast<int>(jp), j_pos);
    if (m == 0) continue;
    int x = s.mul(s.mul(e_of[jp], e_of[static_cast<std::size_t>(j_pos)]),
                  e_of[jp]);
    total += rank_of_element(x) * m;
  }
  internal_check(total >= 0, "DA multiplicity is a nonnegative integer");
  return total;
}

// Rank of the matrix of x acting on the left of the invariant subset L:
// the number of distinct images xL.
inline Int left_action_rank(const Semigroup& s, const std::vector<int>& l,
                            int x) {
  std::vector<int> images;
  for (int ell : l) images.push_back(s.mul(x, ell));
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return Int(images.size());
}

}  // namespace mobchar
