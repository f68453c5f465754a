#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "mobchar/cyclotomic.hpp"
#include "mobchar/semigroup.hpp"

namespace mobchar {

struct ConjugacyClass {
  int representative;
  std::vector<int> members;
  Int centralizer_size;  // z_h, with z_h * |class| = |G|
};

// Exact irreducible character table of a finite group over the cyclotomic
// field of order exp(G); rows are characters, columns are conjugacy classes.
struct GroupCharacterTable {
  std::vector<ConjugacyClass> classes;
  std::vector<int> class_of;       // element -> class index
  std::vector<int> inverse_class;  // class -> class holding the inverses
  std::vector<int> inverse_of;     // element -> inverse element
  std::vector<std::vector<Cyclotomic>> irreducibles;
  std::vector<Int> degrees;
  unsigned exponent = 1;

  std::size_t num_classes() const { return classes.size(); }
  std::size_t num_chars() const { return irreducibles.size(); }

  const Cyclotomic& value(std::size_t row, int element) const {
    return irreducibles[row][static_cast<std::size_t>(
        class_of[static_cast<std::size_t>(element)])];
  }

  std::vector<Cyclotomic> row_on_elements(std::size_t row) const {
    std::vector<Cyclotomic> out(class_of.size());
    for (std::size_t g = 0; g < class_of.size(); ++g)
      out[g] = value(row, static_cast<int>(g));
    return out;
  }
};

namespace detail {

inline long long mulmod(long long a, long long b, long long p) {
  return static_cast<long long>(
      static_cast<unsigned long long>(static_cast<__int128>(a) * b % p));
}

inline long long powmod(long long base, long long exp, long long p) {
  long long r = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) r = mulmod(r, base, p);
    base = mulmod(base, base, p);
    exp >>= 1;
  }
  return r;
}

inline long long invmod(long long a, long long p) {
  return powmod(((a % p) + p) % p, p - 2, p);
}

inline bool is_prime_ll(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace detail

// Group element inverses; rejects non-group input.
inline std::vector<int> group_inverses(const Semigroup& g) {
  auto idopt = g.identity();
  if (!idopt) throw precondition_violation("not a group: no identity");
  const int id = *idopt;
  std::vector<int> inv(g.size(), -1);
  for (int x = 0; x < static_cast<int>(g.size()); ++x) {
    for (int y = 0; y < static_cast<int>(g.size()); ++y)
      if (g.mul(x, y) == id && g.mul(y, x) == id) {
        inv[static_cast<std::size_t>(x)] = y;
        break;
      }
    if (inv[static_cast<std::size_t>(x)] < 0)
      throw precondition_violation("not a group: element without inverse");
  }
  return inv;
}

// Orbit partition under conjugation; classes ordered by minimal member index.
inline std::vector<ConjugacyClass> conjugacy_classes(const Semigroup& g) {
  std::vector<int> inv = group_inverses(g);
  std::vector<ConjugacyClass> classes;
  std::vector<char> seen(g.size(), 0);
  for (int x = 0; x < static_cast<int>(g.size()); ++x) {
    if (seen[static_cast<std::size_t>(x)]) continue;
    ConjugacyClass c;
    c.representative = x;
    std::vector<char> in_orbit(g.size(), 0);
    for (int y = 0; y < static_cast<int>(g.size()); ++y) {
      int z = g.mul(g.mul(inv[static_cast<std::size_t>(y)], x), y);
      if (!in_orbit[static_cast<std::size_t>(z)]) {
        in_orbit[static_cast<std::size_t>(z)] = 1;
        c.members.push_back(z);
        seen[static_cast<std::size_t>(z)] = 1;
      }
    }
    std::sort(c.members.begin(), c.members.end());
    internal_check(Int(g.size()) % Int(c.members.size()) == 0,
                   "class size divides group order");
    c.centralizer_size = Int(g.size()) / Int(c.members.size());
    classes.push_back(std::move(c));
  }
  return classes;
}

// Complete exact character table via the Dixon-Schneider method: common
// eigenvectors of the class matrices over a prime field F_p with
// p = 1 mod exp(G) and p > 2 sqrt(|G|), lifted to cyclotomics by discrete
// Fourier inversion of the eigenvalue multiplicities.  Both orthogonality
// relations are verified exactly before returning.
inline GroupCharacterTable character_table(const Semigroup& g,
                                           std::size_t budget = 2000) {
  using namespace detail;
  if (g.size() > budget)
    throw budget_exceeded("character table budget exceeded", g.size());

  GroupCharacterTable t;
  t.inverse_of = group_inverses(g);
  t.classes = conjugacy_classes(g);
  const int k = static_cast<int>(t.classes.size());
  t.class_of.assign(g.size(), -1);
  for (int c = 0; c < k; ++c)
    for (int x : t.classes[static_cast<std::size_t>(c)].members)
      t.class_of[static_cast<std::size_t>(x)] = c;
  t.inverse_class.resize(static_cast<std::size_t>(k));
  for (int c = 0; c < k; ++c)
    t.inverse_class[static_cast<std::size_t>(c)] =
        t.class_of[static_cast<std::size_t>(t.inverse_of[static_cast<std::size_t>(
            t.classes[static_cast<std::size_t>(c)].representative)])];

  const int id = *g.identity();
  const int id_class = t.class_of[static_cast<std::size_t>(id)];

  // exp(G) as the lcm of element orders (orders of class representatives).
  unsigned e = 1;
  std::vector<unsigned> rep_order(static_cast<std::size_t>(k), 1);
  for (int c = 0; c < k; ++c) {
    int rep = t.classes[static_cast<std::size_t>(c)].representative;
    int p = rep;
    unsigned o = 1;
    while (p != id) {
      p = g.mul(p, rep);
      ++o;
    }
    rep_order[static_cast<std::size_t>(c)] = o;
    e = lcm_u(e, o);
  }
  t.exponent = e;

  // Dixon's prime: p = 1 mod e, p > 2 sqrt(|G|).
  long long p = 0;
  for (long long cand = e + 1;; cand += e) {
    if (cand * cand > 4LL * static_cast<long long>(g.size()) &&
        is_prime_ll(cand)) {
      p = cand;
      break;
    }
  }

  // Class of rep_c^s for s = 0..e-1.
  std::vector<std::vector<int>> pow_class(static_cast<std::size_t>(k),
                                          std::vector<int>(e));
  for (int c = 0; c < k; ++c) {
    int rep = t.classes[static_cast<std::size_t>(c)].representative;
    int cur = id;
    for (unsigned s = 0; s < e; ++s) {
      pow_class[static_cast<std::size_t>(c)][s] =
          t.class_of[static_cast<std::size_t>(cur)];
      cur = g.mul(cur, rep);
    }
  }

  // Class matrices: (A_i)_{j,l} = #{x in C_i : class(x^{-1} rep_l) = j}.
  std::vector<std::vector<std::vector<long long>>> cls_mat(
      static_cast<std::size_t>(k),
      std::vector<std::vector<long long>>(
          static_cast<std::size_t>(k),
          std::vector<long long>(static_cast<std::size_t>(k), 0)));
  for (int i = 0; i < k; ++i)
    for (int l = 0; l < k; ++l) {
      int repl = t.classes[static_cast<std::size_t>(l)].representative;
      for (int x : t.classes[static_cast<std::size_t>(i)].members) {
        int j = t.class_of[static_cast<std::size_t>(
            g.mul(t.inverse_of[static_cast<std::size_t>(x)], repl))];
        ++cls_mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                 [static_cast<std::size_t>(l)];
      }
    }

  // Split F_p^k into common eigenspaces of the class matrices.
  using Vec = std::vector<long long>;
  struct Basis {
    std::vector<Vec> rows;  // RREF over F_p
    std::vector<int> pivots;
  };
  auto rref_insert = [&](Basis& b, Vec v) {
    for (std::size_t r = 0; r < b.rows.size(); ++r) {
      long long c = v[static_cast<std::size_t>(b.pivots[r])];
      if (c)
        for (int j = 0; j < k; ++j)
          v[static_cast<std::size_t>(j)] =
              ((v[static_cast<std::size_t>(j)] -
                mulmod(c, b.rows[r][static_cast<std::size_t>(j)], p)) % p + p) % p;
    }
    int piv = -1;
    for (int j = 0; j < k; ++j)
      if (v[static_cast<std::size_t>(j)]) {
        piv = j;
        break;
      }
    if (piv < 0) return;
    long long scale = invmod(v[static_cast<std::size_t>(piv)], p);
    for (int j = 0; j < k; ++j)
      v[static_cast<std::size_t>(j)] = mulmod(v[static_cast<std::size_t>(j)], scale, p);
    // back-eliminate the new pivot from existing rows
    for (std::size_t r = 0; r < b.rows.size(); ++r) {
      long long c = b.rows[r][static_cast<std::size_t>(piv)];
      if (c)
        for (int j = 0; j < k; ++j)
          b.rows[r][static_cast<std::size_t>(j)] =
              ((b.rows[r][static_cast<std::size_t>(j)] -
                mulmod(c, v[static_cast<std::size_t>(j)], p)) % p + p) % p;
    }
    b.rows.push_back(std::move(v));
    b.pivots.push_back(piv);
  };

  std::vector<Basis> spaces;
  {
    Basis full;
    for (int j = 0; j < k; ++j) {
      Vec v(static_cast<std::size_t>(k), 0);
      v[static_cast<std::size_t>(j)] = 1;
      rref_insert(full, std::move(v));
    }
    spaces.push_back(std::move(full));
  }

  for (int i = 0; i < k; ++i) {
    bool any_big = std::any_of(spaces.begin(), spaces.end(),
                               [](const Basis& b) { return b.rows.size() > 1; });
    if (!any_big) break;
    std::vector<Basis> next;
    for (Basis& space : spaces) {
      const std::size_t d = space.rows.size();
      if (d <= 1) {
        next.push_back(std::move(space));
        continue;
      }
      // Restriction matrix R: A_i b_r = sum_s R[s][r] b_s.
      std::vector<Vec> rest(d, Vec(d, 0));
      for (std::size_t r = 0; r < d; ++r) {
        Vec w(static_cast<std::size_t>(k), 0);
        for (int row = 0; row < k; ++row) {
          long long acc = 0;
          for (int col = 0; col < k; ++col)
            acc = (acc + mulmod(cls_mat[static_cast<std::size_t>(i)]
                                       [static_cast<std::size_t>(row)]
                                       [static_cast<std::size_t>(col)] % p,
                                space.rows[r][static_cast<std::size_t>(col)], p)) % p;
          w[static_cast<std::size_t>(row)] = acc;
        }
        for (std::size_t s = 0; s < d; ++s) {
          long long c = w[static_cast<std::size_t>(space.pivots[s])];
          rest[s][r] = c;
          if (c)
            for (int j = 0; j < k; ++j)
              w[static_cast<std::size_t>(j)] =
                  ((w[static_cast<std::size_t>(j)] -
                    mulmod(c, space.rows[s][static_cast<std::size_t>(j)], p)) % p + p) % p;
        }
        internal_check(std::all_of(w.begin(), w.end(),
                                   [](long long x) { return x == 0; }),
                       "class matrix preserves eigenspace");
      }
      // Split by brute-force eigenvalue scan over F_p.
      std::size_t found = 0;
      for (long long lambda = 0; lambda < p && found < d; ++lambda) {
        // kernel of (rest - lambda I)
        std::vector<Vec> m(d, Vec(d, 0));
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t c = 0; c < d; ++c)
            m[r][c] = (rest[r][c] + (r == c ? p - lambda % p : 0)) % p;
        // Gaussian elimination to find kernel basis.
        std::vector<int> pivot_col(d, -1);
        std::size_t rank = 0;
        for (std::size_t col = 0; col < d && rank < d; ++col) {
          std::size_t sel = rank;
          while (sel < d && m[sel][col] == 0) ++sel;
          if (sel == d) continue;
          std::swap(m[sel], m[rank]);
          long long s = invmod(m[rank][col], p);
          for (std::size_t j = 0; j < d; ++j) m[rank][j] = mulmod(m[rank][j], s, p);
          for (std::size_t r = 0; r < d; ++r)
            if (r != rank && m[r][col]) {
              long long c = m[r][col];
              for (std::size_t j = 0; j < d; ++j)
                m[r][j] = ((m[r][j] - mulmod(c, m[rank][j], p)) % p + p) % p;
            }
          pivot_col[rank] = static_cast<int>(col);
          ++rank;
        }
        if (rank == d) continue;  // not an eigenvalue
        Basis eigen;
        std::vector<char> is_pivot(d, 0);
        for (std::size_t r = 0; r < rank; ++r)
          is_pivot[static_cast<std::size_t>(pivot_col[r])] = 1;
        for (std::size_t free_col = 0; free_col < d; ++free_col) {
          if (is_pivot[free_col]) continue;
          Vec coords(d, 0);
          coords[free_col] = 1;
          for (std::size_t r = 0; r < rank; ++r)
            coords[static_cast<std::size_t>(pivot_col[r])] =
                (p - m[r][free_col]) % p;
          Vec lifted(static_cast<std::size_t>(k), 0);
          for (std::size_t s = 0; s < d; ++s)
            if (coords[s])
              for (int j = 0; j < k; ++j)
                lifted[static_cast<std::size_t>(j)] =
                    (lifted[static_cast<std::size_t>(j)] +
                     mulmod(coords[s], space.rows[s][static_cast<std::size_t>(j)], p)) % p;
          rref_insert(eigen, std::move(lifted));
        }
        found += eigen.rows.size();
        next.push_back(std::move(eigen));
      }
      internal_check(found == d, "class matrix diagonalizable over F_p");
    }
    spaces = std::move(next);
  }
  internal_check(spaces.size() == static_cast<std::size_t>(k),
                 "found all common eigenvectors");

  // Primitive e-th root of unity in F_p.
  long long z = 0;
  for (long long cand = 2; cand < p; ++cand) {
    long long w = powmod(cand, (p - 1) / e, p);
    bool primitive = w != 1 || e == 1;
    for (unsigned q = 2; q <= e && primitive; ++q)
      if (e % q == 0 && powmod(w, e / q, p) == 1) primitive = false;
    if (primitive) {
      z = w;
      break;
    }
  }
  internal_check(z != 0 || e == 1, "primitive root modulo p exists");
  if (e == 1) z = 1;

  // Recover each character from its eigenvector.
  const long long order_mod = static_cast<long long>(g.size()) % p;
  struct Row {
    Int degree;
    std::vector<Cyclotomic> values;
    std::string sort_key;
  };
  std::vector<Row> rows;
  for (const auto& space : spaces) {
    Vec u = space.rows.front();
    long long norm = invmod(u[static_cast<std::size_t>(id_class)], p);
    for (auto& x : u) x = mulmod(x, norm, p);
    // degree from sum_i u_i u_{i*} / |C_i| = |G| / d^2
    long long s = 0;
    for (int c = 0; c < k; ++c) {
      long long csize =
          static_cast<long long>(t.classes[static_cast<std::size_t>(c)].members.size()) % p;
      s = (s + mulmod(mulmod(u[static_cast<std::size_t>(c)],
                             u[static_cast<std::size_t>(
                                 t.inverse_class[static_cast<std::size_t>(c)])], p),
                      invmod(csize, p), p)) % p;
    }
    long long d2 = mulmod(order_mod, invmod(s, p), p);
    long long deg = 0;
    for (long long cand = 1; cand * cand <= static_cast<long long>(g.size()); ++cand)
      if (mulmod(cand, cand, p) == d2) {
        deg = cand;
        break;
      }
    internal_check(deg > 0, "character degree recovered mod p");

    // chi(rep_c) mod p, then exact lift via eigenvalue multiplicities.
    std::vector<long long> chi_mod(static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c) {
      long long csize =
          static_cast<long long>(t.classes[static_cast<std::size_t>(c)].members.size()) % p;
      chi_mod[static_cast<std::size_t>(c)] =
          mulmod(mulmod(deg % p, u[static_cast<std::size_t>(c)], p), invmod(csize, p), p);
    }
    Row row;
    row.degree = deg;
    row.values.resize(static_cast<std::size_t>(k));
    const long long e_inv = invmod(e % p, p);
    const long long z_inv = invmod(z, p);
    for (int c = 0; c < k; ++c) {
      std::vector<Rational> coeffs;
      Cyclotomic val(0);
      for (unsigned tt = 0; tt < e; ++tt) {
        long long m = 0;
        for (unsigned ss = 0; ss < e; ++ss) {
          long long term = mulmod(chi_mod[static_cast<std::size_t>(
                                      pow_class[static_cast<std::size_t>(c)][ss])],
                                  powmod(z_inv, static_cast<long long>(ss) * tt % (p - 1), p), p);
          m = (m + term) % p;
        }
        m = mulmod(m, e_inv, p);
        internal_check(m <= deg, "eigenvalue multiplicity within degree");
        if (m) val += Cyclotomic(Int(m)) * Cyclotomic::root(e, static_cast<long>(tt));
      }
      row.values[static_cast<std::size_t>(c)] = val;
    }
    for (const auto& v : row.values) row.sort_key += v.str() + ";";
    rows.push_back(std::move(row));
  }

  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.sort_key < b.sort_key;
  });
  for (auto& row : rows) {
    t.degrees.push_back(row.degree);
    t.irreducibles.push_back(std::move(row.values));
  }

  // Exact validation of both orthogonality relations and the degree sum.
  Int degsum = 0;
  for (const Int& d : t.degrees) degsum += d * d;
  internal_check(degsum == Int(g.size()), "sum of squared degrees");
  for (std::size_t a = 0; a < t.irreducibles.size(); ++a)
    for (std::size_t b = 0; b < t.irreducibles.size(); ++b) {
      Cyclotomic acc(0);
      for (int c = 0; c < k; ++c)
        acc += Cyclotomic(Int(t.classes[static_cast<std::size_t>(c)].members.size())) *
               t.irreducibles[a][static_cast<std::size_t>(
                   t.inverse_class[static_cast<std::size_t>(c)])] *
               t.irreducibles[b][static_cast<std::size_t>(c)];
      Cyclotomic expected(a == b ? Int(g.size()) : Int(0));
      internal_check(acc == expected, "first orthogonality relation");
    }
  for (int c1 = 0; c1 < k; ++c1)
    for (int c2 = 0; c2 < k; ++c2) {
      Cyclotomic acc(0);
      for (std::size_t r = 0; r < t.irreducibles.size(); ++r)
        acc += conj(t.irreducibles[r][static_cast<std::size_t>(c1)]) *
               t.irreducibles[r][static_cast<std::size_t>(c2)];
      Cyclotomic expected(c1 == c2 ? t.classes[static_cast<std::size_t>(c1)].centralizer_size
                                   : Int(0));
      internal_check(acc == expected, "second orthogonality relation");
    }

  return t;
}

// (psi, alpha)_G = (1/|G|) sum_g psi(g^{-1}) alpha(g), summed over elements
// (alpha need not be a class function).
inline Cyclotomic inner_product(const std::vector<Cyclotomic>& psi,
                                const std::vector<Cyclotomic>& alpha,
                                const Semigroup& g,
                                const std::vector<int>& inverse_of) {
  if (psi.size() != g.size() || alpha.size() != g.size())
    throw invalid_input("inner product needs element-indexed values");
  Cyclotomic acc(0);
  for (std::size_t x = 0; x < g.size(); ++x)
    acc += psi[static_cast<std::size_t>(inverse_of[x])] * alpha[x];
  return acc * Cyclotomic(Rational(1, Int(g.size())));
}

inline Cyclotomic inner_product(const std::vector<Cyclotomic>& psi,
                                const std::vector<Cyclotomic>& alpha,
                                const Semigroup& g) {
  return inner_product(psi, alpha, g, group_inverses(g));
}

// sgn_e(g): parity of g as a permutation of dom e, for each element of a
// concrete maximal subgroup.
inline std::vector<Cyclotomic> sign_character(const Subgroup& sub) {
  if (!sub.group.concrete())
    throw precondition_violation("sign character needs concrete elements");
  auto idopt = sub.group.identity();
  if (!idopt) throw precondition_violation("sign character needs a group");
  std::vector<int> dom =
      sub.group.element(*idopt).domain();
  std::vector<Cyclotomic> out;
  for (std::size_t i = 0; i < sub.group.size(); ++i)
    out.push_back(Cyclotomic(
        Int(sub.group.element(static_cast<int>(i)).sign_on(dom))));
  return out;
}

}  // namespace mobchar
