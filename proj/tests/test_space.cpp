#include <doctest.h>

#include <random>

#include "fixtures.hpp"

using namespace gtop;
using fixtures::family_of_sets;

namespace {

GTSpace point_space_2() {
  // {∅, {0}} on two points
  return GTSpace(validate_topology(family_of_sets(2, {{}, {0}}), 2));
}

}  // namespace

TEST_CASE("subspace traces and the embedding table") {
  GTSpace x(fixtures::chain3());
  SubspaceResult sub = subspace(x, Subset::of({0, 2}, 3));
  CHECK(sub.embedding == std::vector<int>{0, 2});
  CHECK(sub.space.t.words() == std::vector<word_t>{0, 1, 2, 3});  // discrete

  GTSpace d = discrete_space(3);
  CHECK(subspace(d, Subset::of({0, 2}, 3)).space.t.size() == 4);

  CHECK(subspace(x, Subset::full(3)).space.t == x.t);
  CHECK_THROWS_AS(subspace(x, Subset::empty(3)), EmptySubspace);
}

TEST_CASE("product materializes the rectangle closure") {
  GTSpace p = point_space_2();
  GTSpace prod = product(p, p);
  CHECK(prod.n() == 4);
  // only rectangle is {0}x{0} = {(0,0)}, encoded as carrier point 0
  CHECK(prod.t.words() == std::vector<word_t>{0, 1});

  GTSpace d2 = discrete_space(2);
  CHECK(product(d2, d2).t.size() == 16);

  GTSpace indiscrete(validate_topology(family_of_sets(2, {{}}), 2));
  CHECK(product(d2, indiscrete).t.words() == std::vector<word_t>{0});

  CHECK_THROWS_AS(product(discrete_space(9), discrete_space(9)),
                  CapacityExceeded);
}

TEST_CASE("continuity by preimages") {
  GTSpace p = point_space_2();
  GTSpace d = discrete_space(2);
  CHECK(is_continuous(GTMap::identity(2), d, d));
  CHECK_FALSE(is_continuous(GTMap(2, 2, {0, 1}), p, d));
  // constant maps: continuous iff the domain is strong or no open hits the
  // target point
  CHECK(is_continuous(GTMap::constant(2, 2, 1), d, d));
  CHECK_FALSE(is_continuous(GTMap::constant(2, 2, 0), p, p));
  GTSpace strong(validate_topology(family_of_sets(2, {{}, {0, 1}}), 2));
  CHECK(is_continuous(GTMap::constant(2, 2, 0), strong, p));
}

TEST_CASE("pointwise continuity handles empty neighborhood systems") {
  GTSpace p = point_space_2();
  GTSpace d = discrete_space(2);
  CHECK(is_pointwise_continuous_at(GTMap::identity(2), d, d, 0));
  // no open holds 1 in the domain, but the target has one: unsatisfiable
  CHECK_FALSE(is_pointwise_continuous_at(GTMap(2, 2, {0, 1}), p, d, 1));
  // nothing to satisfy when the codomain point has no neighborhoods
  CHECK(is_pointwise_continuous_at(GTMap(2, 2, {1, 1}), d, p, 0));
}

TEST_CASE("global continuity equals pointwise continuity everywhere") {
  for (int nx = 1; nx <= 3; ++nx)
    for (int ny = 1; ny <= 3; ++ny) {
      const auto xs = fixtures::oracle_topologies(nx);
      const auto ys = fixtures::oracle_topologies(ny);
      const auto maps = fixtures::all_maps(nx, ny);
      for (const auto& tx : xs)
        for (const auto& ty : ys) {
          GTSpace X(tx), Y(ty);
          for (const GTMap& f : maps) {
            bool pw = true;
            for (int p = 0; p < nx && pw; ++p)
              pw = is_pointwise_continuous_at(f, X, Y, p);
            CHECK(is_continuous(f, X, Y) == pw);
          }
        }
    }
}

TEST_CASE("homeomorphisms need bijectivity and continuity both ways") {
  GTSpace p = point_space_2();
  GTSpace d = discrete_space(2);
  CHECK(is_homeomorphism(GTMap::identity(2), p, p));
  CHECK_FALSE(is_homeomorphism(GTMap(2, 2, {1, 0}), p, p));
  CHECK(is_homeomorphism(GTMap(2, 2, {1, 0}), d, d));
  CHECK_FALSE(is_homeomorphism(GTMap::constant(2, 2, 0), d, d));
}

TEST_CASE("open maps push members to members") {
  GTSpace p = point_space_2();
  GTSpace d = discrete_space(2);
  CHECK(is_open_map(GTMap::identity(2), d, d));
  CHECK_FALSE(is_open_map(GTMap::constant(2, 2, 1), d, p));
  GTSpace indiscrete(validate_topology(family_of_sets(2, {{}}), 2));
  CHECK(is_open_map(GTMap(2, 2, {1, 0}), indiscrete, p));
}

TEST_CASE("separation axioms") {
  CHECK(is_t2(discrete_space(2)));
  CHECK_FALSE(is_t2(point_space_2()));
  GTSpace k(fixtures::klein_pair_topology());
  CHECK(is_t2(k));

  CHECK(is_regular(discrete_space(2)));
  CHECK_FALSE(is_regular(point_space_2()));
  CHECK(is_regular(k));
}

TEST_CASE("T2 agrees with a full double scan over opens") {
  for (int n = 1; n <= 3; ++n)
    for (const GenTopology& t : fixtures::oracle_topologies(n)) {
      bool naive_t2 = true;
      for (int p = 0; p < n && naive_t2; ++p)
        for (int q = p + 1; q < n && naive_t2; ++q) {
          bool found = false;
          for (word_t u : t.words())
            for (word_t v : t.words())
              if (((u >> p) & 1) && ((v >> q) & 1) && (u & v) == 0)
                found = true;
          naive_t2 = found;
        }
      CHECK(is_t2(GTSpace(t)) == naive_t2);
    }
}

TEST_CASE("subspaces of T2 spaces stay T2") {
  for (int n = 1; n <= 4; ++n)
    for (const GenTopology& t : fixtures::oracle_topologies(n)) {
      GTSpace x(t);
      if (!is_t2(x)) continue;
      for (word_t y = 1; y <= carrier_mask(n); ++y)
        CHECK(is_t2(subspace(x, Subset(y, n)).space));
    }
}

TEST_CASE("restrictions of continuous maps stay continuous") {
  for (int nx = 1; nx <= 3; ++nx)
    for (int ny = 1; ny <= 2; ++ny)
      for (const auto& tx : fixtures::oracle_topologies(nx))
        for (const auto& ty : fixtures::oracle_topologies(ny)) {
          GTSpace X(tx), Y(ty);
          for (const GTMap& f : fixtures::all_maps(nx, ny)) {
            if (!is_continuous(f, X, Y)) continue;
            for (word_t y = 1; y <= carrier_mask(nx); ++y) {
              SubspaceResult sub = subspace(X, Subset(y, nx));
              std::vector<int> im;
              for (int orig : sub.embedding) im.push_back(f(orig));
              GTMap fy(static_cast<int>(im.size()), ny, im);
              CHECK(is_continuous(fy, sub.space, Y));
            }
          }
        }
}

TEST_CASE("T2 spaces close their singletons") {
  for (int n = 1; n <= 4; ++n)
    for (const GenTopology& t : fixtures::oracle_topologies(n)) {
      if (!is_t2(GTSpace(t))) continue;
      for (int x = 0; x < n; ++x)
        CHECK(t.is_closed(Subset::single(x, n)));
    }
}

TEST_CASE("a space with an open covering is strong") {
  for (int n = 1; n <= 3; ++n)
    for (const GenTopology& t : fixtures::oracle_topologies(n)) {
      GTSpace x(t);
      if (t.union_of_all() == carrier_mask(n)) {
        CHECK(is_open_covering(x, t.family()));
        CHECK(t.strong());
      } else {
        CHECK_FALSE(is_open_covering(x, t.family()));
      }
    }
}

TEST_CASE("open coverings") {
  GTSpace k(fixtures::klein_pair_topology());
  CHECK(is_open_covering(
      k, family_of_sets(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}, {0, 3}, {1, 2}})));
  CHECK(is_open_covering(k, family_of_sets(4, {{0, 1, 2, 3}})));
  GTSpace d = discrete_space(2);
  CHECK_FALSE(is_open_covering(d, family_of_sets(2, {{0}})));
  // non-open member disqualifies even a covering family
  GTSpace p = point_space_2();
  CHECK_FALSE(is_open_covering(p, family_of_sets(2, {{0}, {1}})));
}

TEST_CASE("homogeneity search") {
  CHECK(is_homogeneous(discrete_space(3)));
  CHECK_FALSE(is_homogeneous(point_space_2()));
  CHECK(is_homogeneous(GTSpace(fixtures::klein_pair_topology())));
  CHECK_THROWS_AS(is_homogeneous(discrete_space(9)), CapacityExceeded);
}

TEST_CASE("the closure conditions track continuity on random larger spaces") {
  std::mt19937_64 rng(314);
  for (int round = 0; round < 40; ++round) {
    const int nx = 2 + static_cast<int>(rng() % 4);  // 2..5
    const int ny = 2 + static_cast<int>(rng() % 4);
    auto random_top = [&](int n) {
      std::vector<word_t> words;
      for (int i = 0; i < 4; ++i) words.push_back(rng() & carrier_mask(n));
      return union_closure(SetFamily::from_words(n, words), n);
    };
    GTSpace X(random_top(nx)), Y(random_top(ny));
    std::vector<int> im(static_cast<std::size_t>(nx));
    for (int& v : im) v = static_cast<int>(rng() % ny);
    GTMap f(nx, ny, im);
    const bool cont = is_continuous(f, X, Y);
    bool p1 = true, p2 = true;
    for (word_t b = 0; b <= carrier_mask(ny) && p1; ++b)
      p1 = closure(X.t, f.preimage(Subset(b, ny)))
               .subset_of(f.preimage(closure(Y.t, Subset(b, ny))));
    for (word_t a = 0; a <= carrier_mask(nx) && p2; ++a)
      p2 = f.image(closure(X.t, Subset(a, nx)))
               .subset_of(closure(Y.t, f.image(Subset(a, nx))));
    CHECK(cont == p1);
    CHECK(p1 == p2);
  }
}

TEST_CASE("projections from non-strong factors can fail continuity") {
  // regression expectation, not a theorem: the first projection of the
  // product of two copies of {∅,{0}} is not continuous
  GTSpace p = point_space_2();
  GTSpace prod = product(p, p);
  GTMap proj1(4, 2, {0, 0, 1, 1});
  CHECK_FALSE(is_continuous(proj1, prod, p));
}
