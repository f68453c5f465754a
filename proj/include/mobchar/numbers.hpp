#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mobchar {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Error taxonomy mirrored by the CLI exit codes.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct invalid_input : error {
  using error::error;
};
struct budget_exceeded : error {
  std::size_t partial_count = 0;
  budget_exceeded(const std::string& msg, std::size_t count)
      : error(msg), partial_count(count) {}
};
struct precondition_violation : error {
  using error::error;
};
// Signals an implementation bug surfaced by an internal verification pass;
// never a user error.
struct internal_check_failure : error {
  using error::error;
};

inline void internal_check(bool ok, const std::string& what) {
  if (!ok) throw internal_check_failure("internal verification failed: " + what);
}

inline Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

inline Int ipow(Int base, unsigned exp) {
  Int r = 1;
  while (exp) {
    if (exp & 1u) r *= base;
    base *= base;
    exp >>= 1u;
  }
  return r;
}

inline Rational rpow(const Rational& base, long exp) {
  if (exp < 0) {
    if (base == 0) throw invalid_input("0 cannot be raised to a negative power");
    Rational inv = Rational(1) / base;
    return rpow(inv, -exp);
  }
  Rational r = 1;
  Rational b = base;
  unsigned long e = static_cast<unsigned long>(exp);
  while (e) {
    if (e & 1ul) r *= b;
    b *= b;
    e >>= 1ul;
  }
  return r;
}

inline long long to_ll(const Int& v) {
  return v.convert_to<long long>();
}

// Canonical "num/den" rendering, "num" when integral.
inline std::string to_string(const Rational& q) {
  const Int num = boost::multiprecision::numerator(q);
  const Int den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// Accepts "num" or "num/den"; den must be positive after normalization.
inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) throw invalid_input("rational with zero denominator: " + text);
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw invalid_input("cannot parse rational: " + text);
  }
}

inline bool is_integral(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline unsigned gcd_u(unsigned a, unsigned b) {
  while (b) {
    unsigned t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline unsigned lcm_u(unsigned a, unsigned b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd_u(a, b) * b;
}

}  // namespace mobchar
