#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "mobchar/numbers.hpp"
#include "mobchar/partial_perm.hpp"

namespace mobchar {

// Weakly decreasing positive parts.
using Partition = std::vector<unsigned>;

inline unsigned weight(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), 0u);
}

inline std::string partition_str(const Partition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  return out + ")";
}

// a_i = number of parts equal to i, for i = 1..weight.
inline std::vector<unsigned> part_multiplicities(const Partition& p, unsigned upto) {
  std::vector<unsigned> a(upto + 1, 0);
  for (unsigned part : p)
    if (part <= upto) ++a[part];
  return a;
}

// All partitions of r, in descending lexicographic order, starting at (r).
inline std::vector<Partition> partitions_of(unsigned r) {
  std::vector<Partition> out;
  Partition cur;
  // recursive descent with max part bound
  auto rec = [&](auto&& self, unsigned remaining, unsigned max_part) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
      cur.push_back(part);
      self(self, remaining - part, part);
      cur.pop_back();
    }
  };
  rec(rec, r, r == 0 ? 1 : r);
  return out;
}

// Cycle type of the permutation a restricted to its (stabilized) domain.
inline Partition cycle_type(const PartialPerm& a) {
  std::vector<int> dom = a.domain();
  if (!a.stabilizes(dom))
    throw precondition_violation("cycle type needs dom = ran");
  std::vector<char> seen(static_cast<std::size_t>(a.degree()), 0);
  Partition type;
  for (int start : dom) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    unsigned len = 0;
    int cur = start;
    while (!seen[static_cast<std::size_t>(cur)]) {
      seen[static_cast<std::size_t>(cur)] = 1;
      cur = a.apply(cur);
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.begin(), type.end(), std::greater<unsigned>());
  return type;
}

// Stirling number of the second kind via the alternating binomial sum
// S(p, r) = (1/r!) sum_k (-1)^{r-k} C(r,k) k^p.
inline Int stirling2(unsigned p, unsigned r) {
  Int acc = 0;
  for (unsigned k = 0; k <= r; ++k) {
    Int term = binomial(r, k) * ipow(Int(k), p);
    if ((r - k) % 2 == 1) term = -term;
    acc += term;
  }
  Int rf = factorial(r);
  internal_check(acc % rf == 0, "Stirling sum divisible by r!");
  return acc / rf;
}

// Number of standard Young tableaux of shape lambda, by the hook length
// formula.
inline Int hook_f(const Partition& lambda) {
  const unsigned r = weight(lambda);
  if (r > 20) throw invalid_input("hook length formula capped at weight 20");
  if (r == 0) return 1;
  std::vector<unsigned> conj(lambda.empty() ? 0 : lambda[0], 0);
  for (unsigned part : lambda)
    for (unsigned j = 0; j < part; ++j) ++conj[j];
  Int hooks = 1;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (unsigned j = 0; j < lambda[i]; ++j) {
      unsigned arm = lambda[i] - j - 1;
      unsigned leg = conj[j] - static_cast<unsigned>(i) - 1;
      hooks *= Int(arm + leg + 1);
    }
  Int num = factorial(r);
  internal_check(num % hooks == 0, "hook product divides r!");
  return num / hooks;
}

namespace detail {

// First-column hook lengths ("beta numbers") for a partition with a fixed
// number of rows.
inline std::vector<long> beta_numbers(const Partition& lambda, unsigned rows) {
  std::vector<long> beta;
  for (unsigned s = 0; s < rows; ++s) {
    long part = s < lambda.size() ? static_cast<long>(lambda[s]) : 0;
    beta.push_back(part + static_cast<long>(rows - 1 - s));
  }
  return beta;  // strictly decreasing
}

inline Partition partition_from_beta(std::vector<long> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<long>());
  Partition p;
  for (std::size_t s = 0; s < beta.size(); ++s) {
    long part = beta[s] - static_cast<long>(beta.size() - 1 - s);
    if (part > 0) p.push_back(static_cast<unsigned>(part));
  }
  return p;
}

inline Int mn_recurse(const Partition& lambda, const Partition& mu,
                      std::map<std::pair<Partition, Partition>, Int>& memo) {
  if (lambda.empty()) return 1;  // mu is empty too (weights agree)
  auto key = std::make_pair(lambda, mu);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  const long t = static_cast<long>(mu.front());
  Partition mu_rest(mu.begin() + 1, mu.end());
  std::vector<long> beta = beta_numbers(lambda, static_cast<unsigned>(lambda.size()));
  Int acc = 0;
  for (std::size_t s = 0; s < beta.size(); ++s) {
    long target = beta[s] - t;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int height = 0;
    for (long b : beta)
      if (target < b && b < beta[s]) ++height;
    std::vector<long> nb = beta;
    nb[s] = target;
    Int sub = mn_recurse(partition_from_beta(std::move(nb)), mu_rest, memo);
    acc += (height % 2 ? -sub : sub);
  }
  memo.emplace(std::move(key), acc);
  return acc;
}

}  // namespace detail

// Irreducible symmetric group character chi^lambda evaluated on the class of
// cycle type mu, via the Murnaghan-Nakayama border-strip recursion.
inline Int symmetric_character(const Partition& lambda, const Partition& mu) {
  if (weight(lambda) != weight(mu))
    throw invalid_input("symmetric character needs partitions of equal weight");
  if (weight(lambda) > 12)
    throw invalid_input("symmetric character capped at weight 12");
  static std::map<std::pair<Partition, Partition>, Int> memo;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  return detail::mn_recurse(lambda, mu, memo);
}

}  // namespace mobchar
