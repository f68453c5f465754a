#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mobchar/cyclotomic.hpp"

using namespace mobchar;

TEST_CASE("roots of unity satisfy their defining relations") {
  Cyclotomic z3 = Cyclotomic::root(3, 1);
  Cyclotomic z3sq = z3 * z3;
  REQUIRE(z3sq == Cyclotomic::root(3, 2));
  REQUIRE(z3 * z3sq == Cyclotomic(1));
  // 1 + z + z^2 = 0
  REQUIRE((Cyclotomic(1) + z3 + z3sq).is_zero());
  REQUIRE(Cyclotomic::root(2, 1) == Cyclotomic(-1));
  REQUIRE(Cyclotomic::root(4, 2) == Cyclotomic(-1));
}

TEST_CASE("cross-order arithmetic promotes to the lcm") {
  Cyclotomic z4 = Cyclotomic::root(4, 1);
  Cyclotomic z6 = Cyclotomic::root(6, 1);
  Cyclotomic prod = z4 * z6;  // = zeta_12^{3+2}
  REQUIRE(prod == Cyclotomic::root(12, 5));
  REQUIRE(Cyclotomic::root(6, 3) == Cyclotomic(-1));
  REQUIRE(Cyclotomic::root(6, 2) == Cyclotomic::root(3, 1));
}

TEST_CASE("conjugation is a ring involution") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int trial = 0; trial < 50; ++trial) {
    unsigned n = 1 + static_cast<unsigned>(trial % 12);
    std::vector<Rational> ca(n), cb(n);
    for (unsigned k = 0; k < n; ++k) {
      ca[k] = coeff(rng);
      cb[k] = coeff(rng);
    }
    Cyclotomic a = Cyclotomic::from_coeffs(n, ca);
    Cyclotomic b = Cyclotomic::from_coeffs(n, cb);
    REQUIRE(conj(a + b) == conj(a) + conj(b));
    REQUIRE(conj(a * b) == conj(a) * conj(b));
    REQUIRE(conj(conj(a)) == a);
    // a * conj(a) is fixed by conjugation
    Cyclotomic norm = a * conj(a);
    REQUIRE(conj(norm) == norm);
  }
}

TEST_CASE("rational detection and extraction") {
  Cyclotomic z5 = Cyclotomic::root(5, 1);
  Cyclotomic sum = z5 + Cyclotomic::root(5, 2) + Cyclotomic::root(5, 3) +
                   Cyclotomic::root(5, 4);
  REQUIRE(sum.is_rational());
  REQUIRE(sum.rational_value() == -1);
  REQUIRE_FALSE(z5.is_rational());
  REQUIRE_THROWS_AS(z5.rational_value(), invalid_input);
  REQUIRE(Cyclotomic(Rational(7, Int(3))).rational_value() == Rational(7, Int(3)));
}

TEST_CASE("inverses via the extended euclidean algorithm") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> coeff(-3, 3);
  int done = 0;
  while (done < 30) {
    unsigned n = 1 + static_cast<unsigned>(rng() % 10);
    std::vector<Rational> c(n);
    for (unsigned k = 0; k < n; ++k) c[k] = coeff(rng);
    Cyclotomic a = Cyclotomic::from_coeffs(n, c);
    if (a.is_zero()) continue;
    REQUIRE(a * a.inverse() == Cyclotomic(1));
    ++done;
  }
  REQUIRE_THROWS_AS(Cyclotomic(0).inverse(), invalid_input);
}

TEST_CASE("complex embedding matches the exact value") {
  Cyclotomic v = Cyclotomic::root(8, 1) + Cyclotomic::root(8, 7);
  // 2 cos(pi/4) = sqrt(2)
  REQUIRE(std::abs(v.to_complex().real() - std::sqrt(2.0)) < 1e-12);
  REQUIRE(std::abs(v.to_complex().imag()) < 1e-12);
}

TEST_CASE("canonical printing") {
  REQUIRE(Cyclotomic(Rational(1, Int(2))).str() == "1/2");
  REQUIRE(Cyclotomic(-3).str() == "-3");
  Cyclotomic v = Cyclotomic(Rational(1, Int(2))) -
                 Cyclotomic(Rational(1, Int(2))) * Cyclotomic::root(4, 1);
  REQUIRE(v.str() == "1/2-1/2*E(4)^1");
  REQUIRE(Cyclotomic::root(3, 1).str() == "1*E(3)^1");
}
