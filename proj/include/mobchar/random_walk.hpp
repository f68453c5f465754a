#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

#include "mobchar/group_character.hpp"
#include "mobchar/poset.hpp"
#include "mobchar/semigroup.hpp"

namespace mobchar {

// Exact probability weights over the elements of a semigroup.
struct ProbabilityMeasure {
  std::vector<Rational> weights;

  static ProbabilityMeasure uniform(std::size_t n) {
    ProbabilityMeasure p;
    p.weights.assign(n, Rational(1, Int(n)));
    return p;
  }

  static ProbabilityMeasure point_mass(std::size_t n, int at) {
    ProbabilityMeasure p;
    p.weights.assign(n, Rational(0));
    p.weights[static_cast<std::size_t>(at)] = 1;
    return p;
  }

  void validate() const {
    Rational total = 0;
    for (const Rational& w : weights) {
      if (w < 0) throw invalid_input("probability weights must be nonnegative");
      total += w;
    }
    if (total != 1) throw invalid_input("probability weights must sum to 1");
  }
};

// Returns (S^1, extended measure): unchanged when a two-sided identity
// exists, otherwise the identity is appended with p_1 = 0 (the Markov chain
// is unchanged).
inline std::pair<Semigroup, ProbabilityMeasure> adjoin_identity_if_needed(
    const Semigroup& s, const ProbabilityMeasure& pi) {
  if (pi.weights.size() != s.size())
    throw invalid_input("measure must cover every element");
  pi.validate();
  Semigroup s1 = s.with_identity();
  ProbabilityMeasure ext = pi;
  if (s1.size() == s.size() + 1) ext.weights.push_back(Rational(0));
  internal_check(ext.weights.size() == s1.size(), "measure matches S^1");
  return {std::move(s1), std::move(ext)};
}

// M[l1][l2] = sum of p_s over s with s l1 = l2; rows sum to 1 exactly.
inline std::vector<std::vector<Rational>> transition_matrix(
    const Semigroup& s, const ProbabilityMeasure& pi,
    const std::vector<int>& l) {
  if (pi.weights.size() != s.size())
    throw invalid_input("measure must cover every element");
  pi.validate();
  // L must be a left ideal containing the orbit of each member.
  std::vector<int> pos(s.size(), -1);
  for (std::size_t k = 0; k < l.size(); ++k)
    pos[static_cast<std::size_t>(l[k])] = static_cast<int>(k);
  std::vector<std::vector<Rational>> m(
      l.size(), std::vector<Rational>(l.size(), Rational(0)));
  for (std::size_t k = 0; k < l.size(); ++k)
    for (int x = 0; x < static_cast<int>(s.size()); ++x) {
      if (pi.weights[static_cast<std::size_t>(x)] == 0) continue;
      int target = pos[static_cast<std::size_t>(s.mul(x, l[k]))];
      if (target < 0) throw invalid_input("L is not a left ideal");
      m[k][static_cast<std::size_t>(target)] +=
          pi.weights[static_cast<std::size_t>(x)];
    }
  for (const auto& row : m) {
    Rational total = 0;
    for (const Rational& v : row) total += v;
    internal_check(total == 1, "transition rows sum to one");
  }
  return m;
}

// Exact spectrum of the random walk on a minimal left ideal of a
// triangularizable semigroup: one eigenvalue lambda_chi = chi*(pi) per
// irreducible character chi of a maximal subgroup G_J over the regular
// J-classes, with multiplicity given by the Moebius sum over fixed points.
struct SpectrumReport {
  struct Entry {
    int j_class;            // position within the regular-class list
    int char_row;
    Cyclotomic eigenvalue;
    Int multiplicity;
  };
  std::vector<Entry> entries;
  std::vector<int> ideal;  // the minimal left ideal used (element indices)
  std::vector<std::vector<Rational>> transition;  // the matrix M
  std::vector<int> regular_class_ids;             // green class id per position
};

inline SpectrumReport walk_spectrum(const Semigroup& s_in,
                                    const ProbabilityMeasure& pi_in) {
  if (!s_in.is_triangularizable())
    throw precondition_violation(
        "random-walk spectra require a triangularizable semigroup");
  auto [s, pi] = adjoin_identity_if_needed(s_in, pi_in);

  GreenData green = s.green_j();
  std::vector<int> reg;
  for (int c = 0; c < static_cast<int>(green.classes.size()); ++c)
    if (green.regular[static_cast<std::size_t>(c)]) reg.push_back(c);
  std::vector<char> rel(reg.size() * reg.size(), 0);
  for (std::size_t a = 0; a < reg.size(); ++a)
    for (std::size_t b = 0; b < reg.size(); ++b)
      if (green.j_order.leq(reg[a], reg[b])) rel[a * reg.size() + b] = 1;
  Poset u_poset = Poset::from_relation(reg.size(), std::move(rel));
  MobiusTable mu(u_poset);

  std::vector<int> e_of(reg.size(), -1);
  for (int e : s.idempotents()) {
    auto it = std::find(reg.begin(), reg.end(),
                        green.class_of[static_cast<std::size_t>(e)]);
    if (it != reg.end()) {
      std::size_t pos = static_cast<std::size_t>(it - reg.begin());
      if (e_of[pos] < 0) e_of[pos] = e;
    }
  }

  SpectrumReport report;
  report.ideal = s.minimal_left_ideal();
  report.transition = transition_matrix(s, pi, report.ideal);
  report.regular_class_ids = reg;

  auto fix_l = [&](int x) {
    Int count = 0;
    for (int ell : report.ideal)
      if (s.mul(x, ell) == ell) ++count;
    return count;
  };

  Int mult_total = 0;
  for (std::size_t jp = 0; jp < reg.size(); ++jp) {
    const int e_j = e_of[jp];
    Subgroup sub = s.maximal_subgroup(e_j);
    GroupCharacterTable tab = character_table(sub.group);
    for (std::size_t row = 0; row < tab.num_chars(); ++row) {
      internal_check(tab.degrees[row] == 1,
                     "triangularizable semigroups have abelian subgroups");
      // lambda_chi = sum over s >=_J J of p_s chi(e_J s e_J).
      Cyclotomic lambda(0);
      for (int x = 0; x < static_cast<int>(s.size()); ++x) {
        if (pi.weights[static_cast<std::size_t>(x)] == 0) continue;
        if (!green.j_order.leq(reg[jp],
                               green.class_of[static_cast<std::size_t>(x)]))
          continue;
        int moved = s.mul(s.mul(e_j, x), e_j);
        int local = sub.local_of(moved);
        internal_check(local >= 0,
                       "e_J s e_J lies in the maximal subgroup for s >=_J J");
        lambda += Cyclotomic(pi.weights[static_cast<std::size_t>(x)]) *
                  tab.value(row, local);
      }
      // multiplicity = (1/|G_J|) sum_g chi(g^{-1})
      //   sum_{J' <= J} |Fix_L(e_{J'} g e_{J'})| mu(J', J).
      Cyclotomic mult_val(0);
      for (std::size_t g = 0; g < sub.group.size(); ++g) {
        Cyclotomic inner(0);
        for (std::size_t jq = 0; jq < reg.size(); ++jq) {
          if (!u_poset.leq(static_cast<int>(jq), static_cast<int>(jp))) continue;
          Int m = mu(static_cast<int>(jq), static_cast<int>(jp));
          if (m == 0) continue;
          int x = s.mul(s.mul(e_of[jq], sub.parent_of(static_cast<int>(g))),
                        e_of[jq]);
          inner += Cyclotomic(fix_l(x) * m);
        }
        mult_val += tab.value(row, tab.inverse_of[g]) * inner;
      }
      mult_val *= Cyclotomic(Rational(1, Int(sub.group.size())));
      internal_check(mult_val.is_rational() &&
                         is_integral(mult_val.rational_value()) &&
                         mult_val.rational_value() >= 0,
                     "eigenvalue multiplicity is a nonnegative integer");
      Int mult = boost::multiprecision::numerator(mult_val.rational_value());
      mult_total += mult;
      report.entries.push_back(
          {static_cast<int>(jp), static_cast<int>(row), lambda, mult});
    }
  }
  internal_check(mult_total == Int(report.ideal.size()),
                 "multiplicities sum to |L|");
  return report;
}

// Numeric oracle: compares the exact labeled spectrum with the dense
// eigenvalues of M under nearest-match pairing.
struct CrossCheckVerdict {
  bool ok = false;
  double max_error = 0.0;
  std::string detail;
};

inline CrossCheckVerdict numeric_cross_check(
    const SpectrumReport& report, double tolerance = 1e-8) {
  const std::size_t n = report.ideal.size();
  Eigen::MatrixXd m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          static_cast<double>(report.transition[r][c]);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m);
  std::vector<std::complex<double>> numeric;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
    numeric.push_back(solver.eigenvalues()(i));

  std::vector<std::complex<double>> exact;
  for (const auto& entry : report.entries) {
    std::complex<double> v = entry.eigenvalue.to_complex();
    for (Int i = 0; i < entry.multiplicity; ++i) exact.push_back(v);
  }

  CrossCheckVerdict verdict;
  if (exact.size() != numeric.size()) {
    verdict.detail = "eigenvalue counts differ: exact " +
                     std::to_string(exact.size()) + " vs numeric " +
                     std::to_string(numeric.size());
    return verdict;
  }
  std::vector<char> used(numeric.size(), 0);
  double worst = 0.0;
  for (const auto& ev : exact) {
    double best = -1.0;
    std::size_t best_idx = 0;
    for (std::size_t j = 0; j < numeric.size(); ++j) {
      if (used[j]) continue;
      double dist = std::abs(ev - numeric[j]);
      if (best < 0 || dist < best) {
        best = dist;
        best_idx = j;
      }
    }
    used[best_idx] = 1;
    worst = std::max(worst, best);
    if (best > tolerance) {
      verdict.max_error = worst;
      verdict.detail = "unmatched eigenvalue " + std::to_string(ev.real()) +
                       (ev.imag() >= 0 ? "+" : "") + std::to_string(ev.imag()) +
                       "i at distance " + std::to_string(best);
      return verdict;
    }
  }
  verdict.ok = true;
  verdict.max_error = worst;
  return verdict;
}

}  // namespace mobchar
