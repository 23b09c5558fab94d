#include "catch_amalgamated.hpp"

#include "catloc/errors.hpp"
#include "catloc/fixtures.hpp"

using namespace catloc;

namespace {

// Z/2 as a one-object category: id and s with s.s = id.
CategoryPtr z2_monoid() {
  CategoryBuilder b("BZ2");
  Obj x = b.add_object("x");
  Mor s = b.add_morphism("s", x, x);
  b.set_composite(s, s, b.identity(x));
  return b.build();
}

}  // namespace

TEST_CASE("builder fills identities and hom-sets in id order") {
  CategoryBuilder b("C");
  Obj a = b.add_object("a");
  Obj c = b.add_object("c");
  Mor f = b.add_morphism("f", a, c);
  Mor g = b.add_morphism("g", a, c);
  auto cat = b.build();
  REQUIRE(cat->object_count() == 2);
  REQUIRE(cat->morphism_count() == 4);
  CHECK(cat->name_of(cat->identity(a)) == "id_a");
  auto h = cat->hom(a, c);
  REQUIRE(h.size() == 2);
  CHECK(h[0] == f);
  CHECK(h[1] == g);
  CHECK(cat->hom(c, a).empty());
  CHECK(cat->compose(cat->identity(c), f) == f);
  CHECK(check_category(*cat).ok());
  CHECK_FALSE(is_thin(*cat));
}

TEST_CASE("lookups by name throw for unknown ids") {
  auto cat = z2_monoid();
  CHECK(cat->object("x") == Obj{0});
  CHECK_THROWS_AS(cat->object("y"), UnknownId);
  CHECK_THROWS_AS(cat->morphism("t"), UnknownId);
  CHECK_THROWS_AS(hom_set(*cat, Obj{0}, Obj{5}), UnknownId);
}

TEST_CASE("composition checks shapes") {
  fixtures::Poset p = fixtures::chain(3);
  auto cat = fixtures::poset_category(p);
  Mor m01 = cat->morphism("0_1");
  Mor m12 = cat->morphism("1_2");
  CHECK(cat->compose(m12, m01) == cat->morphism("0_2"));
  CHECK_THROWS_AS(cat->compose(m01, m12), ShapeMismatch);
}

TEST_CASE("isomorphisms and inverses") {
  auto cat = z2_monoid();
  Mor s = cat->morphism("s");
  CHECK(cat->is_isomorphism(s));
  CHECK(cat->inverse(s) == s);
  auto r = is_isomorphism(*cat, s);
  CHECK(r.is_iso);
  auto chain = fixtures::poset_category(fixtures::chain(2));
  CHECK_FALSE(chain->is_isomorphism(chain->morphism("0_1")));
}

TEST_CASE("law checker reports missing composites and associativity failures") {
  CategoryBuilder b("Bad");
  Obj x = b.add_object("x");
  Mor s = b.add_morphism("s", x, x);
  Mor t = b.add_morphism("t", x, x);
  auto holes = b.build();
  auto r = check_category(*holes);
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations.front().law == "missing composite");
  CHECK(b.missing_composites().size() == 4);

  // s.s = t, t.s = s.t = s.s.s, t.t = t breaks associativity: (s.s).s = t.s, s.(s.s) = s.t.
  b.set_composite(s, s, t);
  b.set_composite(t, s, s);
  b.set_composite(s, t, t);
  b.set_composite(t, t, t);
  auto bad = b.build();
  auto r2 = check_category(*bad);
  REQUIRE_FALSE(r2.ok());
  CHECK(r2.violations.front().law == "associativity");
}

TEST_CASE("opposite category reverses homs and is cached") {
  auto cat = fixtures::poset_category(fixtures::chain(3));
  auto op = cat->opposite();
  CHECK(op->opposite().get() == cat.get());
  CHECK(cat->opposite().get() == op.get());
  CHECK(check_category(*op).ok());
  for (Obj a : cat->objects()) {
    for (Obj b : cat->objects()) CHECK(op->hom(b, a).size() == cat->hom(a, b).size());
  }
  Mor f = cat->morphism("0_1"), g = cat->morphism("1_2");
  CHECK(op->compose(f, g) == cat->compose(g, f));
}

TEST_CASE("full subcategories and products") {
  auto cat = fixtures::poset_category(fixtures::chain(3));
  ObjectSet s(3);
  s.insert(Obj{0});
  s.insert(Obj{2});
  auto sub = full_subcategory(cat, s, "S");
  CHECK(sub.category->object_count() == 2);
  CHECK(sub.category->morphism_count() == 3);
  CHECK_FALSE(sub.object_from_parent[1].has_value());
  CHECK(check_category(*sub.category).ok());

  auto prod = product_category(cat, cat);
  CHECK(prod.category->object_count() == 9);
  CHECK(prod.category->morphism_count() == 36);
  CHECK(check_category(*prod.category).ok());
  Obj o = prod.object(Obj{1}, Obj{2});
  CHECK(prod.object_pairs[index(o)] == std::pair{Obj{1}, Obj{2}});
}

TEST_CASE("zero objects in the abelian skeleton") {
  auto sk = fixtures::abelian_skeleton(4);
  auto zeros = zero_objects(*sk.category);
  REQUIRE(zeros.size() == 1);
  CHECK(sk.category->name_of(zeros.front()) == "0");
  CHECK(zero_objects(*fixtures::poset_category(fixtures::chain(2))).empty());
}

TEST_CASE("property: every poset category and its opposite satisfy the laws") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& p : fixtures::all_posets(n)) {
      auto cat = fixtures::poset_category(p);
      REQUIRE(check_category(*cat).ok());
      REQUIRE(check_category(*cat->opposite()).ok());
      REQUIRE(is_thin(*cat));
    }
  }
}
