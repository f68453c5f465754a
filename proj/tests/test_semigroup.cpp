#include <catch2/catch_amalgamated.hpp>

#include "mobchar/catalog.hpp"
#include "mobchar/inverse_context.hpp"
#include "mobchar/semigroup.hpp"

using namespace mobchar;

namespace {

Semigroup left_zero_two() {
  // xy = x on {a, b}
  return Semigroup::from_table(2, {0, 0, 1, 1}, {"a", "b"});
}

}  // namespace

TEST_CASE("closure of the rank-2 generators yields the rook monoid I_2") {
  std::vector<PartialPerm> gens{PartialPerm({1, 0}),
                                PartialPerm::partial_identity(2, {0}),
                                PartialPerm::partial_identity(2, {1})};
  Semigroup s = Semigroup::closure(gens);
  REQUIRE(s.size() == 7);
  REQUIRE(s.is_inverse());
  REQUIRE(s.identity().has_value());
}

TEST_CASE("closure of a single idempotent is a singleton") {
  Semigroup s = Semigroup::closure({PartialPerm::partial_identity(3, {1})});
  REQUIRE(s.size() == 1);
}

TEST_CASE("closure respects the element budget") {
  std::vector<PartialPerm> gens{PartialPerm({1, 0}),
                                PartialPerm::partial_identity(2, {0})};
  try {
    Semigroup::closure(gens, 3);
    FAIL("expected budget_exceeded");
  } catch (const budget_exceeded& e) {
    REQUIRE(e.partial_count == 3);
  }
}

TEST_CASE("rook monoid sizes match sum C(n,k)^2 k!") {
  REQUIRE(rook_monoid(1).size() == 2);
  REQUIRE(rook_monoid(2).size() == 7);
  REQUIRE(rook_monoid(3).size() == 34);
  REQUIRE(rook_monoid(4).size() == 209);
}

TEST_CASE("idempotents") {
  Semigroup i2 = rook_monoid(2);
  auto idem = i2.idempotents();
  REQUIRE(idem.size() == 4);
  for (int e : idem) REQUIRE(i2.element(e).is_idempotent());

  Semigroup z3 = cyclic_group(3);
  REQUIRE(z3.idempotents().size() == 1);

  Semigroup chain = boolean_lattice(1);
  REQUIRE(chain.idempotents().size() == chain.size());
}

TEST_CASE("omega powers") {
  Semigroup i2 = rook_monoid(2);
  for (int e : i2.idempotents()) {
    auto [om, om1] = i2.omega_power(e);
    REQUIRE(om == e);
    REQUIRE(om1 == e);
  }
  Semigroup z3 = cyclic_group(3);
  int g = (*z3.identity() == 0) ? 1 : 0;
  auto [om, om1] = z3.omega_power(g);
  REQUIRE(om == *z3.identity());
  REQUIRE(om1 == g);

  Semigroup mono = monogenic(2, 1);  // {x, x^2} with x^3 = x^2
  auto [mo, mo1] = mono.omega_power(0);
  REQUIRE(mono.element_name(mo) == "x^2");
  REQUIRE(mo1 == mo);
}

TEST_CASE("J-classes of I_2 are the three ranks, linearly ordered") {
  Semigroup i2 = rook_monoid(2);
  GreenData g = i2.green_j();
  REQUIRE(g.classes.size() == 3);
  for (char r : g.regular) REQUIRE(r == 1);
  auto order = g.j_order.topological_order();
  for (std::size_t i = 0; i + 1 < order.size(); ++i)
    REQUIRE(g.j_order.leq(order[i], order[i + 1]));
  for (std::size_t c = 0; c < g.classes.size(); ++c)
    for (std::size_t k = 1; k < g.classes[c].size(); ++k)
      REQUIRE(i2.element(g.classes[c][k]).rank() ==
              i2.element(g.classes[c][0]).rank());
}

TEST_CASE("J-classes of a group and of a monogenic semigroup") {
  REQUIRE(cyclic_group(4).green_j().classes.size() == 1);

  Semigroup mono = monogenic(2, 1);
  GreenData g = mono.green_j();
  REQUIRE(g.classes.size() == 2);
  int cx = g.class_of[0], cx2 = g.class_of[1];
  REQUIRE(cx != cx2);
  REQUIRE_FALSE(g.regular[static_cast<std::size_t>(cx)]);
  REQUIRE(g.regular[static_cast<std::size_t>(cx2)]);
  REQUIRE(mono.is_regular_elem(1));
  REQUIRE_FALSE(mono.is_regular_elem(0));
}

TEST_CASE("inverse semigroup recognition") {
  REQUIRE(rook_monoid(2).is_inverse());
  REQUIRE_FALSE(monogenic(2, 1).is_inverse());
  REQUIRE_FALSE(left_zero_two().is_inverse());
  REQUIRE(left_zero_two().is_da());
  REQUIRE_FALSE(left_zero_two().idempotents_commute());
}

TEST_CASE("natural order coincides with restriction on concrete elements") {
  for (const char* spec : {"rook:2", "rook:3", "poi:3"}) {
    Semigroup s = catalog(spec);
    Poset order = s.natural_order();
    for (int a = 0; a < static_cast<int>(s.size()); ++a)
      for (int b = 0; b < static_cast<int>(s.size()); ++b)
        REQUIRE(order.leq(a, b) == leq(s.element(a), s.element(b)));
  }
}

TEST_CASE("natural order of a group is trivial") {
  Semigroup z3 = cyclic_group(3);
  Poset order = z3.natural_order();
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) REQUIRE(order.leq(a, b) == (a == b));
}

TEST_CASE("natural order rejects non-inverse input") {
  REQUIRE_THROWS_AS(left_zero_two().natural_order(), precondition_violation);
}

TEST_CASE("D-class data of I_2") {
  Semigroup i2 = rook_monoid(2);
  InverseContext ctx(i2);
  REQUIRE(ctx.num_classes() == 3);
  // block order puts rank 0 first
  std::vector<std::pair<std::size_t, std::size_t>> shape;
  for (int i = 0; i < 3; ++i)
    shape.emplace_back(ctx.d_class(i).idempotents.size(),
                       ctx.d_class(i).subgroup.group.size());
  REQUIRE(shape == std::vector<std::pair<std::size_t, std::size_t>>{
                       {1, 1}, {2, 1}, {1, 2}});
}

TEST_CASE("D-class data of a group and of a semilattice") {
  Semigroup z5 = cyclic_group(5);
  InverseContext gctx(z5);
  REQUIRE(gctx.num_classes() == 1);
  REQUIRE(gctx.d_class(0).idempotents.size() == 1);

  Semigroup b2 = boolean_lattice(2);
  InverseContext bctx(b2);
  REQUIRE(bctx.num_classes() == 4);
  for (int i = 0; i < 4; ++i) {
    REQUIRE(bctx.d_class(i).elements.size() == 1);
    REQUIRE(bctx.d_class(i).subgroup.group.size() == 1);
  }
}

TEST_CASE("the J relation coincides with D on inverse semigroups") {
  Semigroup s = rook_monoid(3);
  InverseContext ctx(s);
  for (int e : ctx.idempotents())
    for (int f : ctx.idempotents()) {
      bool same_class = ctx.class_of(e) == ctx.class_of(f);
      bool joined = false;
      for (int x = 0; x < static_cast<int>(s.size()) && !joined; ++x)
        joined = ctx.dom(x) == e && ctx.ran(x) == f;
      REQUIRE(same_class == joined);
    }
}

TEST_CASE("maximal subgroups of I_2") {
  Semigroup i2 = rook_monoid(2);
  int top = i2.index_of(PartialPerm::identity(2));
  int zero = i2.index_of(PartialPerm::empty_map(2));
  int one = i2.index_of(PartialPerm::partial_identity(2, {0}));
  REQUIRE(i2.maximal_subgroup(top).group.size() == 2);
  REQUIRE(i2.maximal_subgroup(zero).group.size() == 1);
  REQUIRE(i2.maximal_subgroup(one).group.size() == 1);
  int nonidem = i2.index_of(PartialPerm({1, PartialPerm::kUndef}));
  REQUIRE_THROWS_AS(i2.maximal_subgroup(nonidem), precondition_violation);
}

TEST_CASE("intervals in an inverse semigroup match idempotent intervals") {
  // mu(s, t) equals mu(dom s, dom t); with E(S) = E(I_n) it is
  // (-1)^(rk t - rk s)
  Semigroup s = rook_monoid(3);
  InverseContext ctx(s);
  for (int a = 0; a < static_cast<int>(s.size()); ++a)
    for (int b = 0; b < static_cast<int>(s.size()); ++b) {
      if (!ctx.order().leq(a, b)) continue;
      REQUIRE(ctx.mu()(a, b) == ctx.mu()(ctx.dom(a), ctx.dom(b)));
      int diff = s.element(b).rank() - s.element(a).rank();
      REQUIRE(ctx.mu()(a, b) == (diff % 2 ? Int(-1) : Int(1)));
    }
}

TEST_CASE("minimal left ideals") {
  Semigroup z4 = cyclic_group(4);
  REQUIRE(z4.minimal_left_ideal().size() == 4);

  Semigroup lz1 = left_zero_two().with_identity();
  std::vector<int> ideal = lz1.minimal_left_ideal();
  REQUIRE(ideal == std::vector<int>{0, 1});  // the two left zeroes

  Semigroup b2 = boolean_lattice(2);
  std::vector<int> bottom = b2.minimal_left_ideal();
  REQUIRE(bottom.size() == 1);
  REQUIRE(b2.element(bottom[0]) == PartialPerm::empty_map(2));
}

TEST_CASE("class membership predicates") {
  Semigroup b2 = boolean_lattice(2);
  REQUIRE(b2.is_da());
  REQUIRE(b2.is_triangularizable());

  Semigroup z2 = cyclic_group(2);
  REQUIRE_FALSE(z2.is_da());
  REQUIRE(z2.is_triangularizable());

  Semigroup i2 = rook_monoid(2);
  REQUIRE_FALSE(i2.is_triangularizable());

  REQUIRE(free_lrb(2).is_triangularizable());
  REQUIRE(free_lrb(2).is_da());
}

TEST_CASE("identity adjunction") {
  Semigroup i2 = rook_monoid(2);
  REQUIRE(i2.with_identity().size() == i2.size());

  Semigroup lz = left_zero_two();
  Semigroup lz1 = lz.with_identity();
  REQUIRE(lz1.size() == 3);
  REQUIRE(lz1.identity() == 2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) REQUIRE(lz1.mul(a, b) == lz.mul(a, b));
}

TEST_CASE("abstract tables are validated") {
  REQUIRE_THROWS_AS(Semigroup::from_table(2, {0, 1, 0, 0}), invalid_input);
  REQUIRE_THROWS_AS(Semigroup::from_table(2, {0, 1, 2, 0}), invalid_input);
}

TEST_CASE("catalog coverage") {
  REQUIRE(order_preserving_partial(3).size() == 20);  // C(6, 3)
  REQUIRE(order_preserving_partial(2).size() == 6);
  REQUIRE(order_preserving_partial(3).is_inverse());

  REQUIRE(free_lrb(2).size() == 4);
  REQUIRE(free_lrb(3).size() == 15);

  REQUIRE(boolean_lattice(3).size() == 8);
  REQUIRE(symmetric_group(3).size() == 6);
  REQUIRE(symmetric_group(4).size() == 24);

  Semigroup w = catalog("wreath:2,rook:1");
  REQUIRE(w.size() == 3);
  Semigroup w2 = catalog("wreath:2,rook:2");
  REQUIRE(w2.size() == 17);  // 1 + 4*2 + 2*4
  REQUIRE(w2.is_inverse());

  REQUIRE_THROWS_AS(catalog("nope:1"), invalid_input);
  REQUIRE_THROWS_AS(catalog("rook:x"), invalid_input);
}

TEST_CASE("POI_n has trivial maximal subgroups") {
  Semigroup poi = order_preserving_partial(3);
  for (int e : poi.idempotents())
    REQUIRE(poi.maximal_subgroup(e).group.size() == 1);
}
