#include "catch_amalgamated.hpp"

#include "catloc/errors.hpp"
#include "catloc/fixtures.hpp"

using namespace catloc;

TEST_CASE("Galois connection transposes are inverse bijections") {
  auto p = fixtures::poset_category(fixtures::all_posets(3)[2]);
  auto q = fixtures::poset_category(fixtures::chain(3));
  for (const auto& adj : fixtures::galois_connections(p, q)) {
    REQUIRE(check_adjunction(adj).ok());
    for (Obj x : p->objects()) {
      for (Obj y : q->objects()) {
        auto left = q->hom(adj.left(x), y);
        auto right = p->hom(x, adj.right(y));
        REQUIRE(left.size() == right.size());
        for (Mor phi : left) {
          Mor psi = transpose_to_right(adj, x, phi);
          CHECK(psi == right.front());
          CHECK(transpose_to_left(adj, y, psi) == phi);
        }
      }
    }
  }
}

TEST_CASE("a broken triangle identity is detected") {
  auto sk = fixtures::abelian_skeleton(4);
  Adjunction adj = Adjunction::identity(sk.category);
  CHECK(check_adjunction(adj).ok());
  // negation is natural, but as a counit next to the identity unit it breaks the triangles
  for (Obj x : sk.category->objects()) {
    const auto& fs = sk.factors(x);
    std::vector<std::vector<int>> images;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      std::vector<int> row(fs.size(), 0);
      row[i] = fs[i] - 1;
      images.push_back(row);
    }
    adj.counit.components[index(x)] = sk.morphism(x, x, images);
  }
  CHECK(check_nat(adj.counit).ok());
  auto r = check_adjunction(adj);
  REQUIRE_FALSE(r.ok());
}

TEST_CASE("the monad of a Galois connection is its closure") {
  auto p = fixtures::poset_category(fixtures::chain(3));
  auto q = fixtures::poset_category(fixtures::chain(2));
  for (const auto& adj : fixtures::galois_connections(p, q)) {
    Monad m = monad_of(adj);
    REQUIRE(check_monad(m).ok());
    CHECK(is_idempotent(m));
    fixtures::Operator c;
    for (Obj x : p->objects()) c.push_back(static_cast<int>(index(m(x))));
    auto ops = fixtures::closure_operators(fixtures::chain(3));
    CHECK(std::find(ops.begin(), ops.end(), c) != ops.end());
    CHECK(find_monad_iso(m, fixtures::closure_monad(p, c)));
  }
}

TEST_CASE("algebras of a closure monad are its fixed points") {
  for (const auto& poset : fixtures::all_posets(4)) {
    auto cat = fixtures::poset_category(poset);
    for (const auto& c : fixtures::closure_operators(poset)) {
      EMCategory em = eilenberg_moore(fixtures::closure_monad(cat, c));
      std::size_t fixed = 0;
      for (int x = 0; x < poset.size; ++x) fixed += c[x] == x;
      REQUIRE(em.algebras.size() == fixed);
      REQUIRE(check_category(*em.category).ok());
      REQUIRE(check_adjunction(em.adjunction).ok());
    }
  }
}

TEST_CASE("modules over Z/2 among abelian groups of order at most 4") {
  auto sk = fixtures::abelian_skeleton(4);
  Monad t = fixtures::tensor_monad(sk, "Z/2");
  EMCategory em = eilenberg_moore(t);
  // vector spaces of dimension 0, 1, 2 over F2, each with a single structure
  REQUIRE(em.algebras.size() == 3);
  CHECK(sk.category->name_of(em.algebras[0].carrier) == "0");
  CHECK(sk.category->name_of(em.algebras[1].carrier) == "Z2");
  CHECK(sk.category->name_of(em.algebras[2].carrier) == "Z2xZ2");
  Obj v2 = Obj{2};
  CHECK(em.category->hom(v2, v2).size() == 16);
  CHECK(check_category(*em.category).ok());
  CHECK(check_adjunction(em.adjunction).ok());
  CHECK(check_monad(monad_of(em.adjunction)).ok());
  CHECK(find_monad_iso(monad_of(em.adjunction), t));

  Obj z4 = sk.object("Z4");
  CHECK_FALSE(is_algebra(t, z4, sk.category->identity(z4)));
  Mor f = sk.morphism(z4, sk.object("Z2"), {{1}});
  Mor ff = em.free_image(f);
  CHECK(em.algebra(em.category->source(ff)).carrier == sk.object("Z2"));
  CHECK(em.lift(Obj{1}, Obj{1}, sk.category->identity(sk.object("Z2"))));
}

TEST_CASE("restricted equivalence of an adjunction") {
  auto p = fixtures::poset_category(fixtures::chain(3));
  auto q = fixtures::poset_category(fixtures::chain(2));
  for (const auto& adj : fixtures::galois_connections(p, q)) {
    auto eq = restricted_equivalence(adj);
    CHECK(eq.is_equivalence);
    CHECK(eq.unit_part.category->object_count() == eq.counit_part.category->object_count());
  }
}

TEST_CASE("the identity monad is idempotent with one algebra per object") {
  auto sk = fixtures::abelian_skeleton(4);
  EMCategory em = eilenberg_moore(Monad::identity(sk.category));
  CHECK(em.algebras.size() == sk.category->object_count());
  CHECK(em.category->morphism_count() == sk.category->morphism_count());
}
