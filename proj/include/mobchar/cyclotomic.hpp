#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <mutex>
#include <vector>

#include "mobchar/numbers.hpp"

namespace mobchar {

namespace detail {

// Exact division of a polynomial by a monic divisor (constant term first).
inline std::vector<Int> poly_div_monic(const std::vector<Int>& num,
                                       const std::vector<Int>& divisor) {
  std::vector<Int> quotient(num.size() - divisor.size() + 1, 0);
  std::vector<Int> rem = num;
  for (int k = static_cast<int>(quotient.size()) - 1; k >= 0; --k) {
    Int c = rem[k + divisor.size() - 1];
    quotient[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < divisor.size(); ++j)
      rem[k + j] -= c * divisor[j];
  }
  return quotient;
}

// Monic cyclotomic polynomial Phi_n as integer coefficients, constant term
// first.  Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, built over the
// divisors of n in increasing order.
inline const std::vector<Int>& cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw invalid_input("cyclotomic order must be positive");
  static std::map<unsigned, std::vector<Int>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  for (unsigned d = 1; d <= n; ++d) {
    if (n % d != 0 || cache.count(d)) continue;
    std::vector<Int> poly(d + 1, 0);
    poly[0] = -1;
    poly[d] = 1;  // x^d - 1
    for (unsigned e = 1; e < d; ++e)
      if (d % e == 0) poly = poly_div_monic(poly, cache.at(e));
    cache.emplace(d, std::move(poly));
  }
  return cache.at(n);
}

inline unsigned euler_phi(unsigned n) {
  return static_cast<unsigned>(cyclotomic_polynomial(n).size() - 1);
}

}  // namespace detail

// Exact element of the n-th cyclotomic field Q(zeta_n), stored in the power
// basis {zeta_n^k : k < phi(n)}; exponents >= phi(n) are eliminated by
// reduction mod Phi_n, so the representation is a canonical normal form and
// equality is structural (after promoting both sides to a common order).
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), coeffs_(1, Rational(0)) {}
  /*implicit*/ Cyclotomic(int v) : order_(1), coeffs_(1, Rational(v)) {}
  /*implicit*/ Cyclotomic(const Int& v) : order_(1), coeffs_(1, Rational(v)) {}
  /*implicit*/ Cyclotomic(const Rational& v) : order_(1), coeffs_(1, v) {}

  // zeta_n^k
  static Cyclotomic root(unsigned n, long k) {
    if (n == 0) throw invalid_input("cyclotomic order must be positive");
    long kk = ((k % static_cast<long>(n)) + n) % n;
    std::vector<Rational> raw(n, Rational(0));
    raw[static_cast<std::size_t>(kk)] = 1;
    return Cyclotomic(n, reduce(raw, n));
  }

  static Cyclotomic from_coeffs(unsigned n, std::vector<Rational> raw) {
    return Cyclotomic(n, reduce(std::move(raw), n));
  }

  unsigned order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c == 0; });
  }

  bool is_rational() const {
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
      if (coeffs_[k] != 0) return false;
    return true;
  }

  Rational rational_value() const {
    if (!is_rational())
      throw invalid_input("cyclotomic value is not rational: " + str());
    return coeffs_[0];
  }

  // Same value expressed over a compatible larger order (order_ | new_order).
  Cyclotomic promoted(unsigned new_order) const {
    if (new_order == order_) return *this;
    if (new_order == 0 || new_order % order_ != 0)
      throw invalid_input("cyclotomic order promotion must go to a multiple");
    unsigned stride = new_order / order_;
    std::vector<Rational> raw(new_order, Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      raw[k * stride] = coeffs_[k];
    return Cyclotomic(new_order, reduce(std::move(raw), new_order));
  }

  Cyclotomic conjugate() const {
    std::vector<Rational> raw(order_, Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      std::size_t e = (k == 0) ? 0 : order_ - k;
      raw[e] += coeffs_[k];
    }
    return Cyclotomic(order_, reduce(std::move(raw), order_));
  }

  // Multiplicative inverse via the extended Euclidean algorithm against
  // Phi_n in Q[x].
  Cyclotomic inverse() const {
    if (is_zero()) throw invalid_input("division by zero cyclotomic");
    if (is_rational()) return Cyclotomic(Rational(1) / coeffs_[0]).promoted(order_);
    std::vector<Rational> r0;  // Phi_n
    for (const Int& c : detail::cyclotomic_polynomial(order_)) r0.emplace_back(c);
    std::vector<Rational> r1 = coeffs_;
    trim(r1);
    std::vector<Rational> t0{Rational(0)}, t1{Rational(1)};
    while (!r1.empty()) {
      auto [q, rem] = divmod(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(rem);
      std::vector<Rational> t2 = sub(t0, mul(q, t1));
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    // r0 is now a nonzero constant gcd; scale the Bezout coefficient.
    if (r0.size() != 1)
      throw internal_check_failure("cyclotomic inverse: gcd not constant");
    Rational scale = Rational(1) / r0[0];
    for (auto& c : t0) c *= scale;
    return Cyclotomic(order_, reduce(std::move(t0), order_));
  }

  std::complex<double> to_complex() const {
    std::complex<double> acc(0.0, 0.0);
    const double two_pi = 6.283185307179586476925286766559;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k] == 0) continue;
      double c = static_cast<double>(coeffs_[k]);
      double arg = two_pi * static_cast<double>(k) / static_cast<double>(order_);
      acc += c * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    return acc;
  }

  // Canonical rendering: plain rational when rational, else nonzero terms
  // "c*E(n)^k" in ascending k, e.g. "1/2-1/2*E(4)^1".
  std::string str() const {
    if (is_rational()) return mobchar::to_string(coeffs_[0]);
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k] == 0) continue;
      std::string term;
      if (k == 0) {
        term = mobchar::to_string(coeffs_[0]);
      } else {
        term = mobchar::to_string(coeffs_[k]) + "*E(" + std::to_string(order_) +
               ")^" + std::to_string(k);
      }
      if (!out.empty() && term[0] != '-') out += "+";
      out += term;
    }
    return out;
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = aligned(a, b);
    for (std::size_t k = 0; k < y.coeffs_.size(); ++k) x.coeffs_[k] += y.coeffs_[k];
    return x;
  }
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = aligned(a, b);
    for (std::size_t k = 0; k < y.coeffs_.size(); ++k) x.coeffs_[k] -= y.coeffs_[k];
    return x;
  }
  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    // Fast paths keep rational-heavy workloads (trivial groups) cheap.
    if (a.is_rational()) return scaled(b, a.coeffs_[0]).promoted_max(a.order_);
    if (b.is_rational()) return scaled(a, b.coeffs_[0]).promoted_max(b.order_);
    auto [x, y] = aligned(a, b);
    std::vector<Rational> raw(x.coeffs_.size() + y.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
      if (x.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < y.coeffs_.size(); ++j) {
        if (y.coeffs_[j] == 0) continue;
        raw[i + j] += x.coeffs_[i] * y.coeffs_[j];
      }
    }
    return Cyclotomic(x.order_, reduce(std::move(raw), x.order_));
  }
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
    return a * b.inverse();
  }
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
    auto [x, y] = aligned(a, b);
    return x.coeffs_ == y.coeffs_;
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) {
    return !(a == b);
  }

 private:
  Cyclotomic(unsigned order, std::vector<Rational> reduced)
      : order_(order), coeffs_(std::move(reduced)) {}

  Cyclotomic promoted_max(unsigned other_order) const {
    return other_order > order_ ? promoted(lcm_u(order_, other_order)) : *this;
  }

  static Cyclotomic scaled(const Cyclotomic& a, const Rational& c) {
    Cyclotomic r = a;
    for (auto& x : r.coeffs_) x *= c;
    return r;
  }

  static std::pair<Cyclotomic, Cyclotomic> aligned(const Cyclotomic& a,
                                                   const Cyclotomic& b) {
    unsigned n = lcm_u(a.order_, b.order_);
    return {a.promoted(n), b.promoted(n)};
  }

  static void trim(std::vector<Rational>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  }

  // (quotient, remainder) in Q[x]; divisor need not be monic.
  static std::pair<std::vector<Rational>, std::vector<Rational>> divmod(
      std::vector<Rational> num, const std::vector<Rational>& den) {
    if (den.empty()) throw invalid_input("polynomial division by zero");
    if (num.size() < den.size()) return {{}, std::move(num)};
    std::vector<Rational> q(num.size() - den.size() + 1, Rational(0));
    const Rational lead = den.back();
    for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
      Rational c = num[k + den.size() - 1] / lead;
      q[k] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
    }
    trim(num);
    return {std::move(q), std::move(num)};
  }

  static std::vector<Rational> mul(const std::vector<Rational>& a,
                                   const std::vector<Rational>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
  }

  static std::vector<Rational> sub(const std::vector<Rational>& a,
                                   const std::vector<Rational>& b) {
    std::vector<Rational> r = a;
    if (r.size() < b.size()) r.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
  }

  // Reduce an arbitrary coefficient vector mod Phi_n to length phi(n).
  static std::vector<Rational> reduce(std::vector<Rational> raw, unsigned n) {
    const std::vector<Int>& phi = detail::cyclotomic_polynomial(n);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t k = raw.size(); k-- > deg;) {
      Rational c = raw[k];
      if (c == 0) continue;
      raw[k] = 0;
      // x^k = x^{k-deg} * (x^deg - Phi_n)
      for (std::size_t j = 0; j < deg; ++j)
        raw[k - deg + j] -= c * Rational(phi[j]);
    }
    raw.resize(deg, Rational(0));
    return raw;
  }

  unsigned order_;
  std::vector<Rational> coeffs_;
};

inline Cyclotomic conj(const Cyclotomic& v) { return v.conjugate(); }

}  // namespace mobchar
