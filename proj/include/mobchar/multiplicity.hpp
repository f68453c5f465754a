#pragma once

#include <functional>
#include <vector>

#include "mobchar/partitions.hpp"
#include "mobchar/semigroup_character.hpp"

namespace mobchar {

// Index of an irreducible representation of an inverse semigroup: an
// irreducible character row of a maximal subgroup at a D-class transversal
// idempotent.
struct IrreducibleLabel {
  int d_class;
  int char_row;
};

inline std::vector<IrreducibleLabel> all_labels(const InverseContext& ctx) {
  std::vector<IrreducibleLabel> out;
  for (int i = 0; i < ctx.num_classes(); ++i)
    for (std::size_t r = 0; r < ctx.d_class(i).table.num_chars(); ++r)
      out.push_back({i, static_cast<int>(r)});
  return out;
}

inline Int label_degree(const InverseContext& ctx, IrreducibleLabel label) {
  const auto& d = ctx.d_class(label.d_class);
  return Int(d.idempotents.size()) *
         d.table.degrees[static_cast<std::size_t>(label.char_row)];
}

// (chi, theta)_S = sum_{f <= e} (chi, theta_f)_{G_e} mu(f, e), with chi given
// as element-indexed values on the maximal subgroup at the idempotent e.
// With splitting-field scalars this is the multiplicity of chi* in theta.
inline Cyclotomic intertwine_at(const InverseContext& ctx, int e,
                                const Subgroup& sub,
                                const std::vector<Cyclotomic>& chi,
                                const std::vector<int>& sub_inverses,
                                const SemigroupCharacter& theta) {
  const Semigroup& s = ctx.semigroup();
  Cyclotomic total(0);
  for (int f : ctx.idempotents()) {
    if (!ctx.order().leq(f, e)) continue;
    Int mu = ctx.mu()(f, e);
    if (mu == 0) continue;
    Cyclotomic form(0);
    for (std::size_t g = 0; g < sub.group.size(); ++g) {
      int g_inv = sub_inverses[g];
      form += chi[static_cast<std::size_t>(g_inv)] *
              theta(s.mul(f, sub.parent_of(static_cast<int>(g))));
    }
    total += form * Cyclotomic(Rational(mu, Int(sub.group.size())));
  }
  if (theta.validated()) {
    internal_check(total.is_rational() && is_integral(total.rational_value()) &&
                       total.rational_value() >= 0,
                   "multiplicity of an irreducible in a character is a "
                   "nonnegative integer");
  }
  return total;
}

inline Cyclotomic intertwine(const InverseContext& ctx, IrreducibleLabel label,
                             const SemigroupCharacter& theta) {
  const auto& d = ctx.d_class(label.d_class);
  return intertwine_at(ctx, d.base, d.subgroup,
                       d.table.row_on_elements(
                           static_cast<std::size_t>(label.char_row)),
                       d.table.inverse_of, theta);
}

// chi*(x) = sum over restrictions t <= x lying in a maximal subgroup of the
// label's D-class of chi(p_{dom t} t p_{dom t}^{-1}): the trace of x through
// the matrix-unit decomposition.  deg chi* = n_i deg chi.
inline SemigroupCharacter induced_character(const InverseContext& ctx,
                                            IrreducibleLabel label) {
  const Semigroup& s = ctx.semigroup();
  const auto& d = ctx.d_class(label.d_class);
  std::vector<Cyclotomic> v(s.size(), Cyclotomic(0));
  for (int x = 0; x < static_cast<int>(s.size()); ++x) {
    Cyclotomic acc(0);
    for (int t : ctx.order().below(x)) {
      if (ctx.class_of(t) != label.d_class) continue;
      if (ctx.dom(t) != ctx.ran(t)) continue;
      int local = ctx.conjugate_to_base(t);
      acc += d.table.value(static_cast<std::size_t>(label.char_row), local);
    }
    v[static_cast<std::size_t>(x)] = acc;
  }
  return SemigroupCharacter(s, std::move(v), true);
}

// Character equivalence: s ~ t iff s^{omega+1} and t^{omega+1} are conjugate
// via an element with matching domain and range.  Classes biject with the
// disjoint union of the conjugacy classes of the maximal subgroups; columns
// are indexed per D-class block, then per conjugacy class.
struct CharEquivalence {
  struct Column {
    int d_class;
    int conj_class;
    int rep;  // parent element: the conjugacy class representative in G_{e_i}
  };
  std::vector<Column> columns;
  std::vector<int> col_offset;         // per D-class
  std::vector<int> column_of_element;  // element -> column

  int column(int d_class, int conj_class) const {
    return col_offset[static_cast<std::size_t>(d_class)] + conj_class;
  }
};

inline CharEquivalence char_equivalence(const InverseContext& ctx) {
  const Semigroup& s = ctx.semigroup();
  CharEquivalence eq;
  for (int i = 0; i < ctx.num_classes(); ++i) {
    eq.col_offset.push_back(static_cast<int>(eq.columns.size()));
    const auto& d = ctx.d_class(i);
    for (std::size_t c = 0; c < d.table.num_classes(); ++c)
      eq.columns.push_back(
          {i, static_cast<int>(c),
           d.subgroup.parent_of(d.table.classes[c].representative)});
  }
  eq.column_of_element.resize(s.size());
  for (int x = 0; x < static_cast<int>(s.size()); ++x) {
    auto [om, om1] = s.omega_power(x);
    int i = ctx.class_of(om);
    // om1 lies in the maximal subgroup at om; conjugate it into the base.
    internal_check(ctx.class_of(om1) == i && ctx.dom(om1) == om &&
                       ctx.ran(om1) == om,
                   "s^{omega+1} lies in the maximal subgroup at s^omega");
    int local = ctx.conjugate_to_base(om1);
    int conj_cls = ctx.d_class(i).table.class_of[static_cast<std::size_t>(local)];
    eq.column_of_element[static_cast<std::size_t>(x)] =
        eq.columns.empty() ? -1 : eq.column(i, conj_cls);
  }
  return eq;
}

// Definitional conjugacy test (g = s h s^{-1} with dom s, ran s matching),
// used by tests to cross-check the transversal-based partition.
inline bool conjugate_in_s(const InverseContext& ctx, int g, int h) {
  const Semigroup& s = ctx.semigroup();
  if (ctx.dom(g) != ctx.ran(g) || ctx.dom(h) != ctx.ran(h)) return false;
  for (int x = 0; x < static_cast<int>(s.size()); ++x) {
    if (ctx.dom(x) != ctx.dom(g) || ctx.ran(x) != ctx.dom(h)) continue;
    if (s.mul(s.mul(x, h), ctx.inverse(x)) == g) return true;
  }
  return false;
}

// Closed form for tensor-power multiplicities when e's down-set of
// idempotents is a Boolean algebra and fixed-point sets of G_e stay inside
// it: (chi, theta^p)_S = deg(chi)/|G_e| * sum_{f <= e} rk(f)^p mu(f, e).
inline Rational tensor_mult_boolean(const InverseContext& ctx,
                                    IrreducibleLabel label, unsigned p) {
  const Semigroup& s = ctx.semigroup();
  if (!s.concrete())
    throw precondition_violation("tensor closed form needs concrete elements");
  const auto& d = ctx.d_class(label.d_class);
  const int e = d.base;
  std::vector<int> dom_pts = s.element(e).domain();
  const unsigned r = static_cast<unsigned>(dom_pts.size());

  // {X within dom e : 1_X in E(S)} must be closed under relative complement.
  auto subset_name = [&](unsigned mask) {
    std::string out = "{";
    bool first = true;
    for (unsigned i = 0; i < r; ++i)
      if (mask & (1u << i)) {
        if (!first) out += ",";
        out += std::to_string(dom_pts[i] + 1);
        first = false;
      }
    return out + "}";
  };
  std::vector<char> present(1u << r, 0);
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    std::vector<int> pts;
    for (unsigned i = 0; i < r; ++i)
      if (mask & (1u << i)) pts.push_back(dom_pts[i]);
    present[mask] =
        s.index_of(PartialPerm::partial_identity(s.degree(), pts)) >= 0;
  }
  const unsigned full = (1u << r) - 1;
  for (unsigned mask = 0; mask <= full; ++mask)
    if (present[mask] && !present[full ^ mask])
      throw precondition_violation(
          "idempotent subsets below e are not complement-closed: missing " +
          subset_name(full ^ mask));
  for (std::size_t g = 0; g < d.subgroup.group.size(); ++g) {
    const PartialPerm& perm =
        d.subgroup.group.element(static_cast<int>(g));
    unsigned mask = 0;
    for (unsigned i = 0; i < r; ++i)
      if (perm.apply(dom_pts[i]) == dom_pts[i]) mask |= 1u << i;
    if (!present[mask])
      throw precondition_violation(
          "fixed-point set of a subgroup element is not an idempotent of S: " +
          subset_name(mask));
  }

  Rational acc = 0;
  for (int f : ctx.idempotents()) {
    if (!ctx.order().leq(f, e)) continue;
    Int mu = ctx.mu()(f, e);
    if (mu == 0) continue;
    Int rank(s.element(f).rank());
    acc += Rational(ipow(rank, p) * mu);
  }
  return acc * Rational(d.table.degrees[static_cast<std::size_t>(label.char_row)],
                        Int(d.subgroup.group.size()));
}

// Closed form deg(chi) r! S(p,r) / (|G|^{r-p} |G_X|) for the p-th tensor
// power of the rook representation of G wr S, when S contains every
// idempotent of I_n.  |G_X| is read off S at an idempotent of rank r.
inline Rational wreath_tensor_mult(const Semigroup& s_inner,
                                   std::size_t group_order, unsigned r,
                                   const Int& chi_degree, unsigned p) {
  if (!s_inner.concrete())
    throw precondition_violation("wreath closed form needs a concrete S");
  const int n = s_inner.degree();
  if (r > static_cast<unsigned>(n))
    throw invalid_input("rank exceeds the degree");
  // Hypothesis: E(S) = E(I_n).
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> pts;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) pts.push_back(i);
    if (s_inner.index_of(PartialPerm::partial_identity(n, pts)) < 0)
      throw precondition_violation(
          "S must contain every partial identity of its degree");
  }
  int e = -1;
  for (int x : s_inner.idempotents())
    if (s_inner.element(x).rank() == static_cast<int>(r)) {
      e = x;
      break;
    }
  internal_check(e >= 0, "idempotent of the requested rank exists");
  Int gx(s_inner.maximal_subgroup(e).group.size());
  Rational value = Rational(chi_degree * factorial(r) * stirling2(p, r));
  value *= rpow(Rational(Int(group_order)),
                static_cast<long>(p) - static_cast<long>(r));
  value /= Rational(gx);
  return value;
}

// Exterior-power multiplicities: 1 exactly at (rank-p class, sgn_e), else 0,
// provided S contains all rank-p idempotents of I_n.
inline Int exterior_mult(const InverseContext& ctx, IrreducibleLabel label,
                         unsigned p) {
  const Semigroup& s = ctx.semigroup();
  if (!s.concrete())
    throw precondition_violation("exterior closed form needs concrete elements");
  const int n = s.degree();
  if (p > static_cast<unsigned>(n))
    throw invalid_input("exterior power exceeds the degree");
  // Hypothesis: all rank-p idempotents of I_n lie in S.
  std::vector<unsigned> pick(p);
  for (unsigned i = 0; i < p; ++i) pick[i] = i;
  bool more = true;
  while (more) {
    std::vector<int> pts;
    for (unsigned i : pick) pts.push_back(static_cast<int>(i));
    if (s.index_of(PartialPerm::partial_identity(n, pts)) < 0)
      throw precondition_violation(
          "S must contain every rank-" + std::to_string(p) +
          " partial identity");
    more = false;
    for (int pos = static_cast<int>(p) - 1; pos >= 0; --pos) {
      if (pick[static_cast<unsigned>(pos)] <
          static_cast<unsigned>(n) - p + static_cast<unsigned>(pos)) {
        ++pick[static_cast<unsigned>(pos)];
        for (unsigned i = static_cast<unsigned>(pos) + 1; i < p; ++i)
          pick[i] = pick[i - 1] + 1;
        more = true;
        break;
      }
    }
    if (p == 0) break;
  }

  const auto& d = ctx.d_class(label.d_class);
  if (s.element(d.base).rank() != static_cast<int>(p)) return 0;
  // Identify the sign row of the subgroup's table.
  std::vector<Cyclotomic> sgn = sign_character(d.subgroup);
  for (std::size_t row = 0; row < d.table.num_chars(); ++row)
    if (d.table.row_on_elements(row) == sgn)
      return row == static_cast<std::size_t>(label.char_row) ? 1 : 0;
  throw internal_check_failure("sign character is a row of the table");
}

// Decomposition of the rook (fixed-point) character of a transitive inverse
// semigroup: the restriction of theta to the maximal subgroup at minimal
// non-zero rank carries everything.
struct MultiplicityReport {
  struct Entry {
    IrreducibleLabel label;
    Int multiplicity;
  };
  std::vector<Entry> entries;
  int minimal_class = -1;  // D-class of the minimal non-zero rank idempotents
};

inline MultiplicityReport decompose_transitive(const InverseContext& ctx) {
  const Semigroup& s = ctx.semigroup();
  if (!s.concrete())
    throw precondition_violation("transitive decomposition needs concreteness");
  const int n = s.degree();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool reached = false;
      for (std::size_t i = 0; i < s.size() && !reached; ++i)
        reached = s.element(static_cast<int>(i)).apply(x) == y;
      if (!reached)
        throw precondition_violation("semigroup is not transitive on [n]");
    }

  int min_rank = n + 1;
  for (int e : ctx.idempotents()) {
    int r = s.element(e).rank();
    if (r > 0 && r < min_rank) min_rank = r;
  }
  internal_check(min_rank <= n, "transitive semigroup has a non-zero idempotent");
  std::vector<int> minimal;
  for (int e : ctx.idempotents())
    if (s.element(e).rank() == min_rank) minimal.push_back(e);

  // All minimal non-zero rank idempotents are isomorphic...
  const int i_star = ctx.class_of(minimal.front());
  for (int e : minimal)
    internal_check(ctx.class_of(e) == i_star,
                   "minimal non-zero rank idempotents fall in one D-class");
  // ...and their domains partition [n].
  std::vector<int> cover(static_cast<std::size_t>(n), 0);
  for (int e : minimal)
    for (int pt : s.element(e).domain()) ++cover[static_cast<std::size_t>(pt)];
  for (int pt = 0; pt < n; ++pt)
    internal_check(cover[static_cast<std::size_t>(pt)] == 1,
                   "minimal idempotent domains partition the points");

  SemigroupCharacter theta = fixed_point_character(s);
  const auto& d = ctx.d_class(i_star);
  std::vector<Cyclotomic> theta_restr(d.subgroup.group.size());
  for (std::size_t g = 0; g < d.subgroup.group.size(); ++g)
    theta_restr[g] = theta(d.subgroup.parent_of(static_cast<int>(g)));

  MultiplicityReport report;
  report.minimal_class = i_star;
  for (IrreducibleLabel label : all_labels(ctx)) {
    Int m = 0;
    if (label.d_class == i_star) {
      Cyclotomic ip = inner_product(
          d.table.row_on_elements(static_cast<std::size_t>(label.char_row)),
          theta_restr, d.subgroup.group, d.table.inverse_of);
      internal_check(ip.is_rational() && is_integral(ip.rational_value()) &&
                         ip.rational_value() >= 0,
                     "restriction multiplicities are nonnegative integers");
      m = boost::multiprecision::numerator(ip.rational_value());
    }
    report.entries.push_back({label, m});
  }
  return report;
}

// The conjugation action of S on the idempotents of a D-class:
// e^x = x^{-1} e x when e <= dom x.  The image is a partial permutation
// semigroup on E(D).
struct MunnAction {
  Semigroup image;
  std::vector<PartialPerm> action_of;  // per element of the source semigroup
  std::vector<int> points;             // idempotents of the class, ascending
};

inline MunnAction munn_action(const InverseContext& ctx, int d_class) {
  const Semigroup& s = ctx.semigroup();
  const auto& d = ctx.d_class(d_class);
  const std::vector<int>& pts = d.idempotents;
  auto point_index = [&](int e) {
    auto it = std::lower_bound(pts.begin(), pts.end(), e);
    return (it != pts.end() && *it == e)
               ? static_cast<int>(it - pts.begin())
               : -1;
  };
  MunnAction out;
  out.points = pts;
  for (int x = 0; x < static_cast<int>(s.size()); ++x) {
    std::vector<int> img(pts.size(), PartialPerm::kUndef);
    for (std::size_t k = 0; k < pts.size(); ++k) {
      int e = pts[k];
      if (!ctx.order().leq(e, ctx.dom(x))) continue;
      int moved = s.mul(s.mul(ctx.inverse(x), e), x);
      int idx = point_index(moved);
      internal_check(idx >= 0, "conjugate idempotent stays in the D-class");
      img[k] = idx;
    }
    out.action_of.emplace_back(img);
  }
  out.image = Semigroup::from_elements(out.action_of);
  return out;
}

// The matrix-unit image of each element under the per-D-class isomorphism
// floor(x) -> (p_{dom x} x p_{ran x}^{-1}, E_{dom x, ran x}).
struct AlgebraDecomposition {
  struct Entry {
    int d_class;
    int row_idem;        // dom x
    int col_idem;        // ran x
    int group_elem;      // local index in G_{e_i}
  };
  std::vector<Entry> of_element;
};

inline AlgebraDecomposition algebra_decomposition(const InverseContext& ctx) {
  const Semigroup& s = ctx.semigroup();
  AlgebraDecomposition out;
  out.of_element.resize(s.size());
  for (int x = 0; x < static_cast<int>(s.size()); ++x) {
    int i = ctx.class_of(x);
    const auto& d = ctx.d_class(i);
    int e = ctx.dom(x), f = ctx.ran(x);
    int pe = d.connector.at(e), pf = d.connector.at(f);
    int g = s.mul(s.mul(pe, x), ctx.inverse(pf));
    int local = d.subgroup.local_of(g);
    internal_check(local >= 0, "matrix-unit entry lies in the base subgroup");
    // The map is invertible: floor(x) is recovered from (g, e, f).
    internal_check(
        s.mul(s.mul(ctx.inverse(pe), d.subgroup.parent_of(local)), pf) == x,
        "matrix-unit map inverts");
    out.of_element[static_cast<std::size_t>(x)] = {i, e, f, local};
  }
  // Multiplicativity against the groupoid product: for x, y in a common
  // D-class, E_{e,f} E_{e',f'} is nonzero exactly when f = e', matching
  // ran x = dom y, and then the group parts multiply.
  for (int x = 0; x < static_cast<int>(s.size()); ++x)
    for (int y = 0; y < static_cast<int>(s.size()); ++y) {
      const auto& ex = out.of_element[static_cast<std::size_t>(x)];
      const auto& ey = out.of_element[static_cast<std::size_t>(y)];
      if (ex.d_class != ey.d_class) continue;
      if (ctx.ran(x) != ctx.dom(y)) continue;
      int xy = s.mul(x, y);
      const auto& exy = out.of_element[static_cast<std::size_t>(xy)];
      const auto& d = ctx.d_class(ex.d_class);
      internal_check(exy.d_class == ex.d_class && exy.row_idem == ex.row_idem &&
                         exy.col_idem == ey.col_idem &&
                         exy.group_elem ==
                             d.subgroup.group.mul(ex.group_elem, ey.group_elem),
                     "matrix-unit map is multiplicative");
    }
  Int total = 0;
  for (int i = 0; i < ctx.num_classes(); ++i) {
    const auto& d = ctx.d_class(i);
    total += Int(d.idempotents.size()) * Int(d.idempotents.size()) *
             Int(d.subgroup.group.size());
  }
  internal_check(total == Int(s.size()), "dimension count matches");
  return out;
}

}  // namespace mobchar
