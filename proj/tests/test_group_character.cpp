#include <catch2/catch_amalgamated.hpp>

#include "mobchar/catalog.hpp"
#include "mobchar/group_character.hpp"
#include "mobchar/partitions.hpp"

using namespace mobchar;

TEST_CASE("conjugacy classes of S_3") {
  Semigroup s3 = symmetric_group(3);
  auto classes = conjugacy_classes(s3);
  REQUIRE(classes.size() == 3);
  std::vector<std::pair<std::size_t, Int>> shape;
  for (const auto& c : classes) shape.emplace_back(c.members.size(), c.centralizer_size);
  std::sort(shape.begin(), shape.end());
  REQUIRE(shape == std::vector<std::pair<std::size_t, Int>>{
                       {1, Int(6)}, {2, Int(3)}, {3, Int(2)}});
}

TEST_CASE("conjugacy classes of abelian and trivial groups") {
  REQUIRE(conjugacy_classes(cyclic_group(3)).size() == 3);
  REQUIRE(conjugacy_classes(cyclic_group(1)).size() == 1);
  REQUIRE_THROWS_AS(conjugacy_classes(boolean_lattice(1)),
                    precondition_violation);
}

TEST_CASE("character table of Z/2") {
  GroupCharacterTable t = character_table(cyclic_group(2));
  REQUIRE(t.num_chars() == 2);
  REQUIRE(t.degrees == std::vector<Int>{1, 1});
  // rows (1, 1) and (1, -1) in some class order
  bool found_sign = false;
  for (std::size_t r = 0; r < 2; ++r) {
    bool all_one = true;
    for (std::size_t c = 0; c < 2; ++c) all_one &= t.irreducibles[r][c] == Cyclotomic(1);
    if (!all_one) {
      found_sign = true;
      for (std::size_t c = 0; c < 2; ++c) {
        Cyclotomic v = t.irreducibles[r][c];
        REQUIRE((v == Cyclotomic(1) || v == Cyclotomic(-1)));
      }
    }
  }
  REQUIRE(found_sign);
}

TEST_CASE("character table of S_3 matches Murnaghan-Nakayama") {
  Semigroup s3 = symmetric_group(3);
  GroupCharacterTable t = character_table(s3);
  REQUIRE(t.num_chars() == 3);
  std::vector<Int> degs = t.degrees;
  std::sort(degs.begin(), degs.end());
  REQUIRE(degs == std::vector<Int>{1, 1, 2});

  // match rows to partitions via values on cycle types
  auto parts = partitions_of(3);
  std::vector<char> matched(parts.size(), 0);
  for (std::size_t r = 0; r < t.num_chars(); ++r) {
    bool found = false;
    for (std::size_t pi = 0; pi < parts.size() && !found; ++pi) {
      if (matched[pi]) continue;
      bool same = true;
      for (std::size_t c = 0; c < t.num_classes(); ++c) {
        Partition mu = cycle_type(s3.element(t.classes[c].representative));
        if (t.irreducibles[r][c] !=
            Cyclotomic(symmetric_character(parts[pi], mu))) {
          same = false;
          break;
        }
      }
      if (same) {
        matched[pi] = 1;
        found = true;
      }
    }
    REQUIRE(found);
  }
}

TEST_CASE("character tables of S_4 and S_5 match Murnaghan-Nakayama") {
  for (int n : {4, 5}) {
    Semigroup sn = symmetric_group(n);
    GroupCharacterTable t = character_table(sn);
    auto parts = partitions_of(static_cast<unsigned>(n));
    REQUIRE(t.num_chars() == parts.size());
    std::vector<char> matched(parts.size(), 0);
    for (std::size_t r = 0; r < t.num_chars(); ++r) {
      bool found = false;
      for (std::size_t pi = 0; pi < parts.size() && !found; ++pi) {
        if (matched[pi]) continue;
        bool same = true;
        for (std::size_t c = 0; c < t.num_classes() && same; ++c) {
          Partition mu = cycle_type(sn.element(t.classes[c].representative));
          same = t.irreducibles[r][c] ==
                 Cyclotomic(symmetric_character(parts[pi], mu));
        }
        if (same) matched[pi] = found = true;
      }
      REQUIRE(found);
    }
  }
}

TEST_CASE("character table of Z/3 uses exact cyclotomics") {
  GroupCharacterTable t = character_table(cyclic_group(3));
  REQUIRE(t.num_chars() == 3);
  REQUIRE(t.exponent == 3);
  // every nontrivial row contains a primitive cube root
  int nontrivial = 0;
  for (std::size_t r = 0; r < 3; ++r) {
    bool has_root = false;
    for (std::size_t c = 0; c < 3; ++c)
      has_root |= !t.irreducibles[r][c].is_rational();
    nontrivial += has_root;
  }
  REQUIRE(nontrivial == 2);
  // (chi, chi) = 1 exactly, for each row
  for (std::size_t r = 0; r < 3; ++r) {
    Cyclotomic acc(0);
    for (std::size_t c = 0; c < 3; ++c)
      acc += t.irreducibles[r][static_cast<std::size_t>(
                 t.inverse_class[static_cast<std::size_t>(c)])] *
             t.irreducibles[r][c];
    REQUIRE(acc == Cyclotomic(3));
  }
}

TEST_CASE("character tables of assorted groups validate internally") {
  // construction already enforces both orthogonality relations exactly
  for (int n = 1; n <= 8; ++n) REQUIRE(character_table(cyclic_group(n)).num_chars() ==
                                       static_cast<std::size_t>(n));
  Semigroup w = catalog("wreath:2,rook:2");
  int top = w.index_of(PartialPerm::identity(w.degree()));
  Subgroup hyper = w.maximal_subgroup(top);  // Z/2 wr S_2, order 8
  REQUIRE(hyper.group.size() == 8);
  GroupCharacterTable t = character_table(hyper.group);
  std::vector<Int> degs = t.degrees;
  std::sort(degs.begin(), degs.end());
  REQUIRE(degs == std::vector<Int>{1, 1, 1, 1, 2});
}

TEST_CASE("inner products") {
  Semigroup z2 = cyclic_group(2);
  GroupCharacterTable t = character_table(z2);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      REQUIRE(inner_product(t.row_on_elements(a), t.row_on_elements(b), z2) ==
              Cyclotomic(static_cast<int>(a == b)));

  // regular character (2, 0) against the sign character
  std::vector<Cyclotomic> regular(2), sign(2);
  regular[static_cast<std::size_t>(*z2.identity())] = Cyclotomic(2);
  regular[static_cast<std::size_t>(1 - *z2.identity())] = Cyclotomic(0);
  sign[static_cast<std::size_t>(*z2.identity())] = Cyclotomic(1);
  sign[static_cast<std::size_t>(1 - *z2.identity())] = Cyclotomic(-1);
  REQUIRE(inner_product(sign, regular, z2) == Cyclotomic(1));
}

TEST_CASE("sign character on a maximal subgroup") {
  Semigroup i2 = rook_monoid(2);
  int top = i2.index_of(PartialPerm::identity(2));
  Subgroup g = i2.maximal_subgroup(top);
  std::vector<Cyclotomic> sgn = sign_character(g);
  for (std::size_t i = 0; i < g.group.size(); ++i) {
    const PartialPerm& p = g.group.element(static_cast<int>(i));
    REQUIRE(sgn[i] == Cyclotomic(p == PartialPerm::identity(2) ? 1 : -1));
  }

  // 3-cycle is even
  Semigroup s3 = symmetric_group(3);
  int id3 = *s3.identity();
  Subgroup whole = s3.maximal_subgroup(id3);
  std::vector<Cyclotomic> sgn3 = sign_character(whole);
  for (std::size_t i = 0; i < whole.group.size(); ++i) {
    Partition type = cycle_type(whole.group.element(static_cast<int>(i)));
    int expect = (3 - static_cast<int>(type.size())) % 2 ? -1 : 1;
    REQUIRE(sgn3[i] == Cyclotomic(expect));
  }
}

TEST_CASE("budget is enforced") {
  REQUIRE_THROWS_AS(character_table(symmetric_group(3), 2), budget_exceeded);
}
