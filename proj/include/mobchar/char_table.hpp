#pragma once

#include <vector>

#include "mobchar/multiplicity.hpp"

namespace mobchar {

// The character table machinery of a finite inverse semigroup: C is the
// table of induced irreducible characters on character-equivalence classes,
// Y the block diagonal of the maximal subgroup tables, and A, B the unique
// block upper unitriangular matrices with C = Y A = B Y.  Rows and columns
// are grouped in a fixed linear extension of the <=_J order on D-classes.
struct SemigroupCharTable {
  std::vector<IrreducibleLabel> labels;  // rows
  std::vector<int> row_offset;           // per D-class
  CharEquivalence eq;                    // columns
  std::vector<Int> z;                    // centralizer size per column
  unsigned cyc_order = 1;

  std::vector<std::vector<Cyclotomic>> Y, Yinv, C, B, Binv;
  std::vector<std::vector<Int>> A, Ainv;

  int row(IrreducibleLabel label) const {
    return row_offset[static_cast<std::size_t>(label.d_class)] + label.char_row;
  }
  std::size_t dim() const { return labels.size(); }
};

inline SemigroupCharTable char_tables(const InverseContext& ctx) {
  SemigroupCharTable t;
  t.cyc_order = ctx.cyclotomic_order();
  t.eq = char_equivalence(ctx);
  for (int i = 0; i < ctx.num_classes(); ++i) {
    t.row_offset.push_back(static_cast<int>(t.labels.size()));
    for (std::size_t r = 0; r < ctx.d_class(i).table.num_chars(); ++r)
      t.labels.push_back({i, static_cast<int>(r)});
  }
  const std::size_t k = t.labels.size();
  internal_check(k == t.eq.columns.size(), "square character table");

  t.z.resize(k);
  for (std::size_t c = 0; c < k; ++c) {
    const auto& col = t.eq.columns[c];
    t.z[c] = ctx.d_class(col.d_class)
                 .table.classes[static_cast<std::size_t>(col.conj_class)]
                 .centralizer_size;
  }

  auto zero = [&]() {
    return std::vector<std::vector<Cyclotomic>>(
        k, std::vector<Cyclotomic>(k, Cyclotomic(0)));
  };

  // Y = diag(X_1, ..., X_r), promoted to the common cyclotomic order.
  t.Y = zero();
  t.Yinv = zero();
  for (std::size_t r = 0; r < k; ++r) {
    const auto& lab = t.labels[r];
    const auto& tab = ctx.d_class(lab.d_class).table;
    for (std::size_t c = 0; c < k; ++c) {
      const auto& col = t.eq.columns[c];
      if (col.d_class != lab.d_class) continue;
      t.Y[r][c] = tab.irreducibles[static_cast<std::size_t>(lab.char_row)]
                                  [static_cast<std::size_t>(col.conj_class)]
                      .promoted(t.cyc_order);
      // (X^{-1})_{C,chi} = z_C^{-1} chi(rep_C^{-1}).
      t.Yinv[c][r] =
          tab.irreducibles[static_cast<std::size_t>(lab.char_row)]
                          [static_cast<std::size_t>(
                              tab.inverse_class[static_cast<std::size_t>(
                                  col.conj_class)])]
              .promoted(t.cyc_order) *
          Cyclotomic(Rational(1, t.z[c]));
    }
  }
  // Verify Y Yinv = I within each diagonal block.
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t r2 = 0; r2 < k; ++r2) {
      if (t.labels[r].d_class != t.labels[r2].d_class) continue;
      Cyclotomic acc(0);
      for (std::size_t m = 0; m < k; ++m)
        if (t.eq.columns[m].d_class == t.labels[r].d_class)
          acc += t.Y[r][m] * t.Yinv[m][r2];
      internal_check(acc == Cyclotomic(static_cast<int>(r == r2)),
                     "group character table inverse");
    }

  // A by counting restrictions: for the representative g of each column,
  // every restriction t <= g with dom t = ran t lands in the row of its
  // S-conjugacy class.
  t.A.assign(k, std::vector<Int>(k, 0));
  for (std::size_t c = 0; c < k; ++c) {
    int g = t.eq.columns[c].rep;
    for (int rest : ctx.order().below(g)) {
      if (ctx.dom(rest) != ctx.ran(rest)) continue;
      int i = ctx.class_of(rest);
      int local = ctx.conjugate_to_base(rest);
      int cls = ctx.d_class(i).table.class_of[static_cast<std::size_t>(local)];
      ++t.A[static_cast<std::size_t>(t.eq.column(i, cls))][c];
    }
  }
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) {
      if (r == c)
        internal_check(t.A[r][c] == 1, "A is unitriangular (diagonal)");
      else if (r > c)
        internal_check(t.A[r][c] == 0, "A is unitriangular (lower part)");
      else if (t.eq.columns[r].d_class == t.eq.columns[c].d_class)
        internal_check(t.A[r][c] == 0, "A has identity diagonal blocks");
    }

  // Ainv by back substitution on the unitriangular A.
  t.Ainv.assign(k, std::vector<Int>(k, 0));
  for (std::size_t r = k; r-- > 0;)
    for (std::size_t c = r; c < k; ++c) {
      Int v = (r == c) ? 1 : 0;
      for (std::size_t j = r + 1; j <= c; ++j) v -= t.A[r][j] * t.Ainv[j][c];
      t.Ainv[r][c] = v;
    }

  // C = Y A and B = C Yinv = Y A Y^{-1}, exploiting the block structure.
  t.C = zero();
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t m = 0; m < k; ++m) {
      if (t.eq.columns[m].d_class != t.labels[r].d_class) continue;
      if (t.Y[r][m].is_zero()) continue;
      for (std::size_t c = m; c < k; ++c)
        if (t.A[m][c] != 0) t.C[r][c] += t.Y[r][m] * Cyclotomic(t.A[m][c]);
    }
  t.B = zero();
  t.Binv = zero();
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) {
      for (std::size_t m = 0; m < k; ++m) {
        if (t.eq.columns[m].d_class != t.labels[c].d_class) continue;
        if (t.C[r][m].is_zero()) continue;
        t.B[r][c] += t.C[r][m] * t.Yinv[m][c];
      }
      // Binv = Y Ainv Yinv.
      for (std::size_t m = 0; m < k; ++m) {
        if (t.eq.columns[m].d_class != t.labels[r].d_class) continue;
        if (t.Y[r][m].is_zero()) continue;
        for (std::size_t m2 = 0; m2 < k; ++m2) {
          if (t.Ainv[m][m2] == 0) continue;
          if (t.eq.columns[m2].d_class != t.labels[c].d_class) continue;
          t.Binv[r][c] += t.Y[r][m] * Cyclotomic(t.Ainv[m][m2]) * t.Yinv[m2][c];
        }
      }
    }

  // Verify B is block upper unitriangular and C = B Y.
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) {
      if (t.labels[r].d_class > t.labels[c].d_class)
        internal_check(t.B[r][c].is_zero(), "B is block upper triangular");
      else if (t.labels[r].d_class == t.labels[c].d_class)
        internal_check(t.B[r][c] == Cyclotomic(static_cast<int>(r == c)),
                       "B has identity diagonal blocks");
      Cyclotomic acc(0);
      for (std::size_t m = 0; m < k; ++m) {
        if (t.B[r][m].is_zero()) continue;
        if (t.eq.columns[c].d_class != t.labels[m].d_class) continue;
        acc += t.B[r][m] * t.Y[m][c];
      }
      internal_check(acc == t.C[r][c], "C = B Y");
    }

  return t;
}

// (chi, theta)_S from the inverse of A (the class-side Solomon formula):
// sum over classes C_h of G_i of chi(h^{-1}) z_h^{-1} sum_{C_g} A^{-1}[C_g][C_h] theta(g).
inline Cyclotomic solomon_mult_classwise(const InverseContext& ctx,
                                         const SemigroupCharTable& t,
                                         IrreducibleLabel label,
                                         const SemigroupCharacter& theta) {
  const auto& tab = ctx.d_class(label.d_class).table;
  Cyclotomic total(0);
  for (std::size_t h = 0; h < t.dim(); ++h) {
    if (t.eq.columns[h].d_class != label.d_class) continue;
    int cls = t.eq.columns[h].conj_class;
    Cyclotomic inner(0);
    for (std::size_t gcol = 0; gcol < t.dim(); ++gcol) {
      if (t.Ainv[gcol][h] == 0) continue;
      inner += Cyclotomic(t.Ainv[gcol][h]) * theta(t.eq.columns[gcol].rep);
    }
    Cyclotomic chi_h_inv =
        tab.irreducibles[static_cast<std::size_t>(label.char_row)]
                        [static_cast<std::size_t>(
                            tab.inverse_class[static_cast<std::size_t>(cls)])];
    total += chi_h_inv * inner * Cyclotomic(Rational(1, t.z[h]));
  }
  return total;
}

// (chi, theta)_S from the inverse of B (the character-side Solomon formula):
// sum over labels psi of B^{-1}[psi][chi] (psi, theta|_{G_j})_{G_j}.
inline Cyclotomic solomon_mult_charwise(const InverseContext& ctx,
                                        const SemigroupCharTable& t,
                                        IrreducibleLabel label,
                                        const SemigroupCharacter& theta) {
  const int target = t.row(label);
  Cyclotomic total(0);
  for (std::size_t p = 0; p < t.dim(); ++p) {
    if (t.Binv[p][static_cast<std::size_t>(target)].is_zero()) continue;
    const auto& lab = t.labels[p];
    const auto& d = ctx.d_class(lab.d_class);
    std::vector<Cyclotomic> theta_restr(d.subgroup.group.size());
    for (std::size_t g = 0; g < d.subgroup.group.size(); ++g)
      theta_restr[g] = theta(d.subgroup.parent_of(static_cast<int>(g)));
    Cyclotomic ip = inner_product(
        d.table.row_on_elements(static_cast<std::size_t>(lab.char_row)),
        theta_restr, d.subgroup.group, d.table.inverse_of);
    total += t.Binv[p][static_cast<std::size_t>(target)] * ip;
  }
  return total;
}

// Independent brute-force oracle: solve theta(column) = sum_chi m_chi
// C[chi][column] by Gaussian elimination on the invertible C.
inline std::vector<Cyclotomic> oracle_multiplicities(
    const InverseContext& ctx, const SemigroupCharTable& t,
    const SemigroupCharacter& theta) {
  const std::size_t k = t.dim();
  // Solve m C = rhs, i.e. C^T m^T = rhs^T.
  std::vector<std::vector<Cyclotomic>> aug(
      k, std::vector<Cyclotomic>(k + 1, Cyclotomic(0)));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) aug[r][c] = t.C[c][r];
    aug[r][k] = theta(t.eq.columns[r].rep);
  }
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (piv < k && aug[piv][col].is_zero()) ++piv;
    internal_check(piv < k, "C is invertible");
    std::swap(aug[piv], aug[col]);
    Cyclotomic inv = aug[col][col].inverse();
    for (std::size_t j = col; j <= k; ++j) aug[col][j] *= inv;
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col || aug[r][col].is_zero()) continue;
      Cyclotomic factor = aug[r][col];
      for (std::size_t j = col; j <= k; ++j)
        aug[r][j] -= factor * aug[col][j];
    }
  }
  std::vector<Cyclotomic> m(k);
  for (std::size_t r = 0; r < k; ++r) m[r] = aug[r][k];
  return m;
}

}  // namespace mobchar
