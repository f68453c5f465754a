#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mobchar/partial_perm.hpp"
#include "mobchar/semigroup.hpp"
#include "mobchar/wreath.hpp"
#include "mobchar/catalog.hpp"

using namespace mobchar;

namespace {

// The paper's running example: 2 -> 3, 4 -> 1 on four points (1-based).
PartialPerm sigma_example() {
  return PartialPerm({PartialPerm::kUndef, 2, PartialPerm::kUndef, 0});
}

PartialPerm random_pperm(std::mt19937& rng, int degree) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<int> points;
  for (int i = 0; i < degree; ++i)
    if (coin(rng)) points.push_back(i);
  std::vector<int> targets = points;
  std::shuffle(targets.begin(), targets.end(), rng);
  std::vector<int> img(static_cast<std::size_t>(degree), PartialPerm::kUndef);
  for (std::size_t k = 0; k < points.size(); ++k)
    img[static_cast<std::size_t>(points[k])] = targets[k];
  return PartialPerm(img);
}

}  // namespace

TEST_CASE("composition follows the right-action rule") {
  PartialPerm sigma = sigma_example();
  REQUIRE(compose(sigma, sigma) == PartialPerm::empty_map(4));
  REQUIRE(compose(sigma, PartialPerm::identity(4)) == sigma);
  REQUIRE(compose(sigma, sigma.inverse()) == sigma.domain_idempotent());
  REQUIRE_THROWS_AS(compose(sigma, PartialPerm::identity(3)), invalid_input);
}

TEST_CASE("inverse swaps domain and range") {
  PartialPerm sigma = sigma_example();
  REQUIRE(sigma.inverse() ==
          PartialPerm({3, PartialPerm::kUndef, 1, PartialPerm::kUndef}));
  REQUIRE(sigma.inverse().inverse() == sigma);
  PartialPerm e = PartialPerm::partial_identity(4, {0, 2});
  REQUIRE(e.inverse() == e);
}

TEST_CASE("rank counts the range") {
  REQUIRE(sigma_example().rank() == 2);
  REQUIRE(PartialPerm::empty_map(3).rank() == 0);
  REQUIRE(PartialPerm::identity(5).rank() == 5);
}

TEST_CASE("restriction order") {
  PartialPerm sigma = sigma_example();
  PartialPerm restr = sigma.restricted_to({1});  // keeps 2 -> 3 only
  REQUIRE(leq(restr, sigma));
  REQUIRE(leq(sigma, sigma));
  REQUIRE(leq(PartialPerm::partial_identity(2, {0}),
              PartialPerm::partial_identity(2, {0, 1})));
  REQUIRE_FALSE(leq(PartialPerm::partial_identity(2, {0}),
                    PartialPerm::partial_identity(2, {1})));
}

TEST_CASE("fixed points") {
  REQUIRE(PartialPerm::identity(3).fixed_points() == std::vector<int>{0, 1, 2});
  REQUIRE(sigma_example().fixed_points().empty());
  REQUIRE(PartialPerm::partial_identity(4, {1, 3}).fixed_points() ==
          std::vector<int>{1, 3});
}

TEST_CASE("rook matrices") {
  auto id = PartialPerm::identity(2).rook_matrix();
  REQUIRE(id == std::vector<std::vector<int>>{{1, 0}, {0, 1}});
  auto zero = PartialPerm::empty_map(2).rook_matrix();
  REQUIRE(zero == std::vector<std::vector<int>>{{0, 0}, {0, 0}});
  auto sigma = sigma_example().rook_matrix();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      REQUIRE(sigma[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
              (((i == 1 && j == 2) || (i == 3 && j == 0)) ? 1 : 0));
}

TEST_CASE("involution and product laws on random elements") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 5;
    PartialPerm a = random_pperm(rng, n), b = random_pperm(rng, n);
    REQUIRE(compose(compose(a, a.inverse()), a) == a);
    REQUIRE(compose(compose(a.inverse(), a), a.inverse()) == a.inverse());
    REQUIRE(compose(a, b).inverse() == compose(b.inverse(), a.inverse()));
    if (leq(a, b)) REQUIRE(leq(a.inverse(), b.inverse()));

    // rook matrix of a product is the product of rook matrices
    auto ma = a.rook_matrix(), mb = b.rook_matrix();
    auto mab = compose(a, b).rook_matrix();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int acc = 0;
        for (int k = 0; k < n; ++k)
          acc += ma[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                 mb[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        REQUIRE(acc == mab[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      }
  }
}

TEST_CASE("partial identities intersect") {
  PartialPerm x = PartialPerm::partial_identity(4, {0, 1, 2});
  PartialPerm y = PartialPerm::partial_identity(4, {1, 2, 3});
  REQUIRE(compose(x, y) == PartialPerm::partial_identity(4, {1, 2}));
}

TEST_CASE("wreath composition multiplies labels along the carrier") {
  Semigroup z2 = cyclic_group(2);
  const int one = 1 - *z2.identity();  // the non-identity element

  SECTION("identity carriers multiply labels pointwise") {
    WreathElement x(&z2, PartialPerm::identity(1), {one});
    WreathElement y(&z2, PartialPerm::identity(1), {one});
    WreathElement xy = wreath_compose(x, y);
    REQUIRE(xy.label(0) == *z2.identity());
  }

  SECTION("empty carrier absorbs") {
    WreathElement x(&z2, PartialPerm::empty_map(2), {one, one});
    WreathElement y(&z2, PartialPerm::identity(2), {one, one});
    REQUIRE(wreath_compose(x, y).carrier() == PartialPerm::empty_map(2));
  }

  SECTION("labels off the domain are normalized away") {
    WreathElement x(&z2, PartialPerm::partial_identity(2, {0}), {one, one});
    REQUIRE(x.label(1) == *z2.identity());
  }

  SECTION("embedding into partial permutations is multiplicative") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
      PartialPerm ca = random_pperm(rng, 2), cb = random_pperm(rng, 2);
      std::uniform_int_distribution<int> lab(0, 1);
      WreathElement a(&z2, ca, {lab(rng), lab(rng)});
      WreathElement b(&z2, cb, {lab(rng), lab(rng)});
      REQUIRE(wreath_compose(a, b).embedded() ==
              compose(a.embedded(), b.embedded()));
    }
  }
}

TEST_CASE("string rendering is 1-based") {
  REQUIRE(sigma_example().str() == "[-,3,-,1]");
}
