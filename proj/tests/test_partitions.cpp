#include <catch2/catch_amalgamated.hpp>

#include "mobchar/partitions.hpp"

using namespace mobchar;

namespace {

// Brute-force count of standard Young tableaux: fill cells 1..r so rows and
// columns increase.
Int count_syt(const Partition& lambda) {
  std::vector<unsigned> filled(lambda.size(), 0);  // cells used per row
  unsigned r = weight(lambda);
  std::function<Int(unsigned)> rec = [&](unsigned next) -> Int {
    if (next > r) return 1;
    Int total = 0;
    for (std::size_t row = 0; row < lambda.size(); ++row) {
      if (filled[row] == lambda[row]) continue;
      if (row > 0 && filled[row - 1] <= filled[row]) continue;
      ++filled[row];
      total += rec(next + 1);
      --filled[row];
    }
    return total;
  };
  return rec(1);
}

}  // namespace

TEST_CASE("partition enumeration") {
  REQUIRE(partitions_of(0) == std::vector<Partition>{{}});
  REQUIRE(partitions_of(4).size() == 5);
  REQUIRE(partitions_of(6).size() == 11);
  for (const Partition& p : partitions_of(5)) {
    REQUIRE(weight(p) == 5);
    for (std::size_t i = 1; i < p.size(); ++i) REQUIRE(p[i - 1] >= p[i]);
  }
}

TEST_CASE("hook length formula against tableau enumeration") {
  REQUIRE(hook_f({2, 1}) == 2);
  REQUIRE(hook_f({5}) == 1);
  REQUIRE(hook_f({1, 1, 1}) == 1);
  for (unsigned r = 1; r <= 7; ++r)
    for (const Partition& lambda : partitions_of(r))
      REQUIRE(hook_f(lambda) == count_syt(lambda));
}

TEST_CASE("stirling numbers of the second kind") {
  REQUIRE(stirling2(4, 2) == 7);
  REQUIRE(stirling2(3, 3) == 1);
  REQUIRE(stirling2(1, 1) == 1);
  REQUIRE(stirling2(5, 1) == 1);
  REQUIRE(stirling2(0, 0) == 1);
  REQUIRE(stirling2(3, 5) == 0);
  // recurrence S(p, r) = r S(p-1, r) + S(p-1, r-1)
  for (unsigned p = 1; p <= 9; ++p)
    for (unsigned r = 1; r <= 9; ++r)
      REQUIRE(stirling2(p, r) ==
              Int(r) * stirling2(p - 1, r) + stirling2(p - 1, r - 1));
}

TEST_CASE("Murnaghan-Nakayama values") {
  REQUIRE(symmetric_character({2, 1}, {1, 1, 1}) == 2);
  REQUIRE(symmetric_character({2, 1}, {2, 1}) == 0);
  REQUIRE(symmetric_character({2, 1}, {3}) == -1);

  SECTION("trivial and sign rows") {
    for (unsigned r = 1; r <= 6; ++r)
      for (const Partition& mu : partitions_of(r)) {
        REQUIRE(symmetric_character({r}, mu) == 1);
        Partition column(r, 1);
        int sign = (static_cast<int>(r) - static_cast<int>(mu.size())) % 2 ? -1 : 1;
        REQUIRE(symmetric_character(column, mu) == sign);
      }
  }

  SECTION("degree equals the tableau count") {
    for (unsigned r = 1; r <= 7; ++r) {
      Partition ones(r, 1);
      for (const Partition& lambda : partitions_of(r))
        REQUIRE(symmetric_character(lambda, ones) == hook_f(lambda));
    }
  }

  SECTION("first orthogonality over class sizes") {
    // sum_mu |C_mu| chi^a(mu) chi^b(mu) = r! [a = b]
    for (unsigned r = 1; r <= 6; ++r) {
      auto parts = partitions_of(r);
      auto class_size = [&](const Partition& mu) {
        Int denom = 1;
        auto mult = part_multiplicities(mu, r);
        for (unsigned i = 1; i <= r; ++i) {
          denom *= ipow(Int(i), mult[i]);
          denom *= factorial(mult[i]);
        }
        return factorial(r) / denom;
      };
      for (const Partition& a : parts)
        for (const Partition& b : parts) {
          Int acc = 0;
          for (const Partition& mu : parts)
            acc += class_size(mu) * symmetric_character(a, mu) *
                   symmetric_character(b, mu);
          REQUIRE(acc == (a == b ? factorial(r) : Int(0)));
        }
    }
  }

  SECTION("weight mismatch is rejected") {
    REQUIRE_THROWS_AS(symmetric_character({2}, {1, 1, 1}), invalid_input);
  }
}

TEST_CASE("cycle types of partial permutations") {
  REQUIRE(cycle_type(PartialPerm::identity(3)) == Partition{1, 1, 1});
  REQUIRE(cycle_type(PartialPerm({1, 0})) == Partition{2});
  REQUIRE(cycle_type(PartialPerm::empty_map(2)) == Partition{});
  REQUIRE(cycle_type(PartialPerm::partial_identity(4, {1, 3})) ==
          Partition{1, 1});
  // 3-cycle on {1,2,3} inside degree 4
  REQUIRE(cycle_type(PartialPerm({1, 2, 0, PartialPerm::kUndef})) ==
          Partition{3});
  REQUIRE_THROWS_AS(cycle_type(PartialPerm({1, PartialPerm::kUndef})),
                    precondition_violation);
}
