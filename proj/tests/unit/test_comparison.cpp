#include "catch_amalgamated.hpp"

#include "catloc/errors.hpp"
#include "catloc/fixtures.hpp"
#include "oracles/oracles.hpp"

using namespace catloc;

TEST_CASE("identity functor between equal localizations") {
  auto cat = fixtures::poset_category(fixtures::chain(3));
  auto loc = *build_localization(cat, cat->morphism("1_2"));
  auto r = compare(Functor::identity(cat), loc, loc);
  REQUIRE(r.alpha);
  REQUIRE(r.beta);
  CHECK(r.alpha_is_iso);
  CHECK(r.beta_is_iso);
  CHECK(r.naturally_isomorphic);
  CHECK(r.mutually_inverse);
}

TEST_CASE("preserving equivalences without preserving local objects") {
  auto cat = fixtures::poset_category(fixtures::chain(2));
  auto id = Localization::identity(cat);
  auto top = fixtures::closure_localization(cat, {1, 1});
  auto r = compare(Functor::identity(cat), id, top);
  CHECK(r.preserves_equivalences);
  CHECK_FALSE(r.preserves_locals);
  REQUIRE(r.preserves_locals.object_witness);
  CHECK(*r.preserves_locals.object_witness == Obj{0});
  CHECK(r.alpha);
  CHECK_FALSE(r.beta);
  CHECK_FALSE(r.naturally_isomorphic);

  // The reverse direction flips both.
  auto back = compare(Functor::identity(cat), top, id);
  CHECK_FALSE(back.preserves_equivalences);
  REQUIRE(back.preserves_equivalences.morphism_witness);
  CHECK(back.preserves_locals);
  CHECK_FALSE(back.alpha);
  CHECK(back.beta);
}

TEST_CASE("comparison along Galois connections matches a pointwise oracle") {
  // For thin categories both maps exist iff the pointwise inequalities hold.
  auto pp = fixtures::chain(3);
  auto qp = fixtures::chain(2);
  auto p = fixtures::poset_category(pp), q = fixtures::poset_category(qp);
  std::size_t positive = 0, negative = 0;
  for (const auto& adj : fixtures::galois_connections(p, q)) {
    for (const auto& c1 : fixtures::closure_operators(pp)) {
      for (const auto& c2 : fixtures::closure_operators(qp)) {
        auto l1 = fixtures::closure_localization(p, c1);
        auto l2 = fixtures::closure_localization(q, c2);
        auto r = compare(adj.left, l1, l2);
        // beta exists iff F carries every L1-local object to an L2-local one
        bool locals = true;
        for (int x = 0; x < pp.size; ++x) {
          int fx = static_cast<int>(index(adj.left(Obj{static_cast<std::uint32_t>(c1[x])})));
          locals = locals && c2[fx] == fx;
        }
        REQUIRE(r.beta.has_value() == locals);
        REQUIRE(r.naturally_isomorphic == (r.alpha_is_iso && r.beta_is_iso));
        (r.naturally_isomorphic ? positive : negative)++;
      }
    }
  }
  CHECK(positive > 0);
  CHECK(negative > 0);
}

TEST_CASE("mates correspond along an adjunction") {
  auto p = fixtures::poset_category(fixtures::chain(3));
  auto lat = fixtures::lattice_structure(p);
  const Adjunction& adj = lat.join_diagonal;  // join -| diagonal
  int tested = 0;
  for (const auto& c : fixtures::closure_operators(fixtures::chain(3))) {
    auto l = fixtures::closure_localization(p, c);
    auto l2 = product_localization(lat.square, l, l);
    auto alpha = left_comparison(adj, l2, l);
    auto beta = right_comparison(adj, l2, l);
    if (!alpha || !beta) continue;
    ++tested;
    CHECK(same_nat(mate_of(*alpha, adj, l2, l), *beta));
    CHECK(same_nat(mate_inverse(*beta, adj, l2, l), *alpha));
  }
  CHECK(tested > 0);
}

TEST_CASE("joins, meets and the colimit comparison") {
  auto anti = fixtures::poset_category(fixtures::antichain(2));
  CHECK_THROWS_AS(join(*anti, anti->objects()), Unsupported);
  auto chain = fixtures::poset_category(fixtures::chain(4));
  REQUIRE(is_lattice(*chain));
  CHECK(join(*chain, {Obj{1}, Obj{2}}) == Obj{2});
  CHECK(meet(*chain, {Obj{1}, Obj{2}}) == Obj{1});
  CHECK_FALSE(is_lattice(*fixtures::poset_category(fixtures::antichain(2))));

  auto pp = fixtures::chain(4);
  for (const auto& c : fixtures::closure_operators(pp)) {
    auto loc = fixtures::closure_localization(chain, c);
    std::vector<bool> locals(4);
    for (int x = 0; x < 4; ++x) locals[x] = c[x] == x;
    for (std::vector<Obj> d : {std::vector<Obj>{Obj{0}, Obj{1}}, std::vector<Obj>{Obj{1}, Obj{3}}}) {
      auto r = colimit_comparison(*chain, loc, d);
      CHECK(r.is_equivalence);
      int j = std::max(c[index(d[0])], c[index(d[1])]);
      CHECK(index(r.join_of_local) == static_cast<std::uint32_t>(j));
      CHECK(index(r.local_of_join) == static_cast<std::uint32_t>(*oracle::poset_reflection(pp.leq, locals, static_cast<int>(index(r.join)))));
    }
  }
}

TEST_CASE("limit comparison on a chain") {
  auto chain = fixtures::poset_category(fixtures::chain(3));
  auto loc = fixtures::closure_localization(chain, {1, 1, 2});
  auto r = limit_comparison(*chain, loc, {Obj{0}, Obj{2}});
  CHECK(r.meet == Obj{0});
  CHECK(r.meet_of_local == Obj{1});
  CHECK(r.is_isomorphism);
}
