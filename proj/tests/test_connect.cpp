#include <doctest.h>

#include "fixtures.hpp"
#include "gtop/naive.hpp"

using namespace gtop;
using fixtures::family_of_sets;

TEST_CASE("separated pairs") {
  GTSpace k(fixtures::klein_pair_topology());
  CHECK(are_separated(k, Subset::of({0, 1}, 4), Subset::of({2, 3}, 4)));
  CHECK(are_separated(k, Subset::empty(4), Subset::full(4)));

  GTSpace x(fixtures::chain3());
  CHECK_FALSE(are_separated(x, Subset::of({0}, 3), Subset::of({1, 2}, 3)));
}

TEST_CASE("connectivity verdicts carry the first separation found") {
  GTSpace x(fixtures::chain3());
  CHECK(is_connected(x).connected);

  GTSpace k(fixtures::klein_pair_topology());
  const auto verdict = is_connected(k);
  REQUIRE_FALSE(verdict.connected);
  CHECK(verdict.witness->u == Subset::of({0, 1}, 4));
  CHECK(verdict.witness->v == Subset::of({2, 3}, 4));
  // witness invariants
  CHECK((verdict.witness->closure_u & verdict.witness->v).is_empty());
  CHECK((verdict.witness->closure_v & verdict.witness->u).is_empty());

  GTSpace one(validate_topology(family_of_sets(1, {{}}), 1));
  CHECK(is_connected(one).connected);

  GTSpace big(union_closure(SetFamily(21), 21));
  CHECK_THROWS_AS(is_connected(big), CapacityExceeded);
}

TEST_CASE("subset connectivity goes through the subspace") {
  GTSpace k(fixtures::klein_pair_topology());
  CHECK(is_connected_subset(k, Subset::single(2, 4)));
  CHECK_FALSE(is_connected_subset(k, Subset::of({0, 1}, 4)));
  GTSpace x(fixtures::chain3());
  CHECK(is_connected_subset(x, Subset::full(3)));
  CHECK_THROWS_AS(is_connected_subset(x, Subset::empty(3)), EmptySubspace);
}

TEST_CASE("ambient-closure route equals the literal subspace route") {
  for (int n = 1; n <= 4; ++n)
    for (const GenTopology& t : fixtures::oracle_topologies(n)) {
      GTSpace x(t);
      for (word_t a = 1; a <= carrier_mask(n); ++a) {
        const bool fast = is_connected_subset(x, Subset(a, n));
        const bool literal =
            is_connected(subspace(x, Subset(a, n)).space).connected;
        CHECK(fast == literal);
      }
    }
}

TEST_CASE("components by exhaustive subset scan") {
  GTSpace k(fixtures::klein_pair_topology());
  CHECK(component_of(k, Subset::full(4), 0) == Subset::of({0}, 4));
  GTSpace x(fixtures::chain3());
  CHECK(component_of(x, Subset::full(3), 0) == Subset::full(3));
  CHECK(component_of(x, Subset::of({1}, 3), 1) == Subset::of({1}, 3));

  CHECK_THROWS_AS(component_of(x, Subset::of({1}, 3), 0), PointNotInSet);
  CHECK_THROWS_AS(
      component_of(GTSpace(discrete_space(20)), Subset::full(20), 0),
      CapacityExceeded);
}

TEST_CASE("component postconditions") {
  for (int n = 1; n <= 3; ++n)
    for (const GenTopology& t : fixtures::oracle_topologies(n)) {
      GTSpace x(t);
      for (word_t a = 1; a <= carrier_mask(n); ++a) {
        const Subset as(a, n);
        for (int p : as.elements()) {
          const Subset c = component_of(x, as, p);
          CHECK(c.contains(p));
          CHECK(c.subset_of(as));
          CHECK(is_connected_subset(x, c));
          // no strictly larger connected subset of a contains it
          for (word_t s = 1; s <= a; ++s) {
            if ((s & ~a) || !(((s >> p) & 1))) continue;
            if ((c.bits() & ~s) == 0 && s != c.bits() &&
                is_connected_subset(x, Subset(s, n)))
              CHECK((s & ~c.bits()) == 0);
          }
        }
      }
    }
}

TEST_CASE("continuous images of connected spaces stay connected") {
  for (int nx = 1; nx <= 3; ++nx)
    for (int ny = 1; ny <= 3; ++ny)
      for (const auto& tx : fixtures::oracle_topologies(nx))
        for (const auto& ty : fixtures::oracle_topologies(ny)) {
          GTSpace X(tx), Y(ty);
          if (!is_connected(X).connected) continue;
          for (const GTMap& f : fixtures::all_maps(nx, ny)) {
            if (!is_continuous(f, X, Y)) continue;
            CHECK(is_connected_subset(Y, f.image(Subset::full(nx))));
          }
        }
}

TEST_CASE("open injective maps reflect connectedness") {
  for (int nx = 1; nx <= 3; ++nx)
    for (int ny = 1; ny <= 3; ++ny)
      for (const auto& tx : fixtures::oracle_topologies(nx))
        for (const auto& ty : fixtures::oracle_topologies(ny)) {
          GTSpace X(tx), Y(ty);
          for (const GTMap& f : fixtures::all_maps(nx, ny)) {
            if (!f.injective() || !is_open_map(f, X, Y)) continue;
            for (word_t s = 1; s <= carrier_mask(nx); ++s) {
              const Subset ss(s, nx);
              if (is_connected_subset(Y, f.image(ss)))
                CHECK(is_connected_subset(X, ss));
            }
          }
        }
}

TEST_CASE("maximal components of closed sets are closed") {
  for (int n = 1; n <= 4; ++n)
    for (const GenTopology& t : fixtures::oracle_topologies(n)) {
      GTSpace x(t);
      for (word_t o : t.words()) {
        const word_t a = ~o & carrier_mask(n);
        if (a == 0) continue;
        for (const Subset& comp : components_of(x, Subset(a, n)))
          CHECK(t.is_closed(comp));
      }
    }
}

TEST_CASE("naive connectivity path agrees with the kernel") {
  for (int n = 1; n <= 3; ++n)
    for (const GenTopology& t : fixtures::oracle_topologies(n)) {
      GTSpace x(t);
      const auto fam = naive::family_of(t);
      for (word_t a = 1; a <= carrier_mask(n); ++a) {
        naive::Set y;
        for (int e : Subset(a, n).elements()) y.insert(e);
        CHECK(is_connected_subset(x, Subset(a, n)) ==
              naive::connected_on(fam, y));
      }
    }
}
