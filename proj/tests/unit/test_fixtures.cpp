#include "catch_amalgamated.hpp"

#include "catloc/errors.hpp"
#include "catloc/fixtures.hpp"
#include "oracles/oracles.hpp"

using namespace catloc;

namespace {

oracle::Group oracle_group(const fixtures::GroupTable& g) {
  if (g.name == "S3") return oracle::symmetric3();
  if (g.name == "D4") return oracle::dihedral4();
  if (g.name == "Q8") return oracle::quaternion8();
  if (g.name == "1") return oracle::cyclic_product({});
  std::vector<int> orders;
  std::string s = g.name;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find('x', pos);
    orders.push_back(std::stoi(s.substr(pos + 1, next - pos - 1)));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return oracle::cyclic_product(orders);
}

oracle::Relation relation(const fixtures::Poset& p) { return p.leq; }

}  // namespace

TEST_CASE("abelian skeleton hom counts match element-level homomorphisms") {
  auto sk = fixtures::abelian_skeleton(8);
  REQUIRE(sk.category->object_count() == 11);
  CHECK(sk.category->name_of(Obj{0}) == "0");
  for (Obj a : sk.category->objects()) {
    auto ga = oracle::cyclic_product(sk.factors(a));
    CHECK(static_cast<int>(ga.order) == sk.order(a));
    for (Obj b : sk.category->objects()) {
      auto gb = oracle::cyclic_product(sk.factors(b));
      INFO(sk.category->name_of(a) << " -> " << sk.category->name_of(b));
      CHECK(sk.category->hom(a, b).size() == oracle::hom_count(ga, gb));
    }
  }
  CHECK(check_category(*fixtures::abelian_skeleton(4).category).ok());
}

TEST_CASE("abelian skeleton lookups") {
  auto sk = fixtures::abelian_skeleton(4);
  CHECK(sk.object("Z2xZ2") == *sk.find(fixtures::Factors{2, 2}));
  CHECK_THROWS_AS(sk.object("Z8"), UnknownId);
  Obj z4 = sk.object("Z4"), z2 = sk.object("Z2");
  Mor reduce = sk.morphism(z4, z2, {{1}});
  CHECK(sk.category->source(reduce) == z4);
  CHECK(sk.images[index(reduce)] == std::vector<std::vector<int>>{{1}});
}

TEST_CASE("tensor monads agree with the bilinear oracle") {
  auto sk = fixtures::abelian_skeleton(8);
  for (int k : {2, 3, 4}) {
    Monad t = fixtures::tensor_monad(sk, "Z/" + std::to_string(k));
    REQUIRE(check_monad(t).ok());
    CHECK(is_idempotent(t));
    auto ring = oracle::cyclic_product({k});
    for (Obj a : sk.category->objects()) {
      auto ga = oracle::cyclic_product(sk.factors(a));
      auto expected = oracle::tensor_dual(ring, ga);
      auto got = oracle::cyclic_product(sk.factors(t(a)));
      INFO("Z/" << k << " (x) " << sk.category->name_of(a));
      CHECK(oracle::torsion_profile(got) == oracle::torsion_profile(expected));
    }
  }
  Monad t2 = fixtures::tensor_monad(sk, "Z2");
  CHECK(t2(sk.object("Z4")) == sk.object("Z2"));
  CHECK(fixtures::tensor_monad(sk, "Z3")(sk.object("Z2")) == sk.object("0"));
  CHECK_THROWS_AS(fixtures::tensor_monad(sk, "Z"), UnknownId);
}

TEST_CASE("group skeleton hom counts and abelianization") {
  auto sk = fixtures::group_skeleton(8);
  REQUIRE(sk.groups.size() == 14);
  for (Obj a : sk.category->objects()) {
    auto ga = oracle_group(sk.groups[index(a)]);
    REQUIRE(ga.order == sk.groups[index(a)].order);
    for (Obj b : sk.category->objects()) {
      auto gb = oracle_group(sk.groups[index(b)]);
      INFO(sk.groups[index(a)].name << " -> " << sk.groups[index(b)].name);
      CHECK(sk.category->hom(a, b).size() == oracle::hom_count(ga, gb));
    }
  }
  Monad ab = fixtures::abelianization_monad(sk);
  REQUIRE(check_monad(ab).ok());
  CHECK(is_idempotent(ab));
  for (Obj a : sk.category->objects()) {
    auto expected = oracle::abelianize(oracle_group(sk.groups[index(a)]));
    const auto& image = sk.groups[index(ab(a))];
    INFO(sk.groups[index(a)].name);
    CHECK(image.order == expected.order);
    CHECK(oracle::torsion_profile(oracle_group(image)) == expected.profile);
  }
  CHECK(ab(sk.object("S3")) == sk.object("Z2"));
  CHECK(ab(sk.object("Q8")) == sk.object("Z2xZ2"));
  CHECK_THROWS_AS(fixtures::group_skeleton(9), Unsupported);
}

TEST_CASE("poset enumeration matches brute force") {
  for (int n = 1; n <= 4; ++n) CHECK(fixtures::all_posets(n).size() == oracle::poset_count(n));
  CHECK(fixtures::all_posets(4).size() == 16);
}

TEST_CASE("closure and interior operators") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& p : fixtures::all_posets(n)) {
      auto closures = fixtures::closure_operators(p);
      CHECK(closures.size() == oracle::closure_count(relation(p)));
      auto cat = fixtures::poset_category(p);
      for (const auto& c : closures) {
        REQUIRE(check_monad(fixtures::closure_monad(cat, c)).ok());
        REQUIRE(check_localization(fixtures::closure_localization(cat, c)).ok());
      }
      for (const auto& c : fixtures::interior_operators(p))
        REQUIRE(check_colocalization(fixtures::interior_colocalization(cat, c)).ok());
    }
  }
  auto chain3 = fixtures::closure_operators(fixtures::chain(3));
  CHECK(chain3.front() == fixtures::Operator{0, 1, 2});
  CHECK(std::find(chain3.begin(), chain3.end(), fixtures::Operator{0, 2, 2}) != chain3.end());
  auto anti = fixtures::closure_operators(fixtures::antichain(2));
  REQUIRE(anti.size() == 1);
  CHECK(anti.front() == fixtures::Operator{0, 1});
}

TEST_CASE("poset round trip and validation") {
  auto p = fixtures::all_posets(4)[7];
  auto back = fixtures::poset_of(*fixtures::poset_category(p));
  CHECK(back.leq == p.leq);
  fixtures::Poset bad = fixtures::antichain(2);
  bad.leq[0][1] = bad.leq[1][0] = true;
  CHECK_THROWS_AS(fixtures::validate(bad), Error);
}

TEST_CASE("Galois connections match brute force") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& p : fixtures::all_posets(n)) {
      for (int m = 1; m <= 3; ++m) {
        for (const auto& q : fixtures::all_posets(m)) {
          auto cp = fixtures::poset_category(p), cq = fixtures::poset_category(q);
          auto all = fixtures::galois_connections(cp, cq);
          INFO("sizes " << n << " and " << m);
          REQUIRE(all.size() == oracle::galois_count(p.leq, q.leq));
          for (const auto& adj : all) REQUIRE(check_adjunction(adj).ok());
        }
      }
    }
  }
}

TEST_CASE("lattice structure on a chain") {
  auto cat = fixtures::poset_category(fixtures::chain(3));
  auto lat = fixtures::lattice_structure(cat);
  CHECK(check_adjunction(lat.join_diagonal).ok());
  CHECK(check_adjunction(lat.diagonal_meet).ok());
  Obj pair = lat.square.object(Obj{0}, Obj{2});
  CHECK(lat.join(pair) == Obj{2});
  CHECK(lat.meet(pair) == Obj{0});
  CHECK_THROWS_AS(fixtures::lattice_structure(fixtures::poset_category(fixtures::antichain(2))), Unsupported);
}

TEST_CASE("test morphisms skip identities") {
  auto cat = fixtures::poset_category(fixtures::chain(3));
  auto ms = fixtures::enumerate_test_morphisms(*cat);
  REQUIRE(ms.size() == 3);
  CHECK(cat->name_of(ms[0]) == "0_1");
  CHECK(fixtures::enumerate_test_morphisms(*fixtures::poset_category(fixtures::antichain(3))).empty());
}

TEST_CASE("budget limits are enforced") {
  Budget tiny;
  tiny.max_objects = 3;
  CHECK_THROWS_AS(fixtures::abelian_skeleton(8, tiny), BudgetExceeded);
  Budget few;
  few.max_morphisms = 10;
  CHECK_THROWS_AS(fixtures::group_skeleton(8, few), BudgetExceeded);
}
