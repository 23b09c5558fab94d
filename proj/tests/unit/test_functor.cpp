#include "catch_amalgamated.hpp"

#include "catloc/errors.hpp"
#include "catloc/fixtures.hpp"

using namespace catloc;

namespace {

std::vector<Obj> objs(std::initializer_list<int> xs) {
  std::vector<Obj> out;
  for (int x : xs) out.push_back(Obj{static_cast<std::uint32_t>(x)});
  return out;
}

}  // namespace

TEST_CASE("identity functor and composition") {
  auto c = fixtures::poset_category(fixtures::chain(3));
  Functor id = Functor::identity(c);
  CHECK(check_functor(id).ok());
  Functor top = fixtures::thin_functor(c, c, objs({2, 2, 2}), "top");
  Functor shift = fixtures::thin_functor(c, c, objs({1, 2, 2}), "shift");
  CHECK(check_functor(shift).ok());
  Functor twice = compose(shift, shift);
  CHECK(same_functor(twice, top));
  CHECK(same_functor(compose(id, shift), shift));
  CHECK_FALSE(same_functor(shift, top));
}

TEST_CASE("functor law violations are reported") {
  auto sk = fixtures::abelian_skeleton(2);
  // id_Z2 sent to the zero map breaks the unit law.
  Functor f = Functor::identity(sk.category);
  Obj z2 = sk.object("Z2");
  Mor zero = sk.morphism(z2, z2, {{0}});
  f.morphisms[index(sk.category->identity(z2))] = zero;
  auto r = check_functor(f);
  CHECK_FALSE(r.ok());
}

TEST_CASE("transformations between thin functors") {
  auto c = fixtures::poset_category(fixtures::chain(3));
  Functor id = Functor::identity(c);
  Functor top = fixtures::thin_functor(c, c, objs({2, 2, 2}));
  auto t = fixtures::thin_transformation(id, top);
  REQUIRE(t);
  CHECK(check_nat(*t).ok());
  CHECK_FALSE(fixtures::thin_transformation(top, id));
  CHECK_FALSE(is_natural_isomorphism(*t));
  CHECK(is_natural_isomorphism(NatTransform::identity(top)));
  CHECK(same_nat(vertical_compose(NatTransform::identity(top), *t), *t));
}

TEST_CASE("whiskering and horizontal composition agree on components") {
  auto c = fixtures::poset_category(fixtures::chain(3));
  Functor id = Functor::identity(c);
  Functor shift = fixtures::thin_functor(c, c, objs({1, 2, 2}));
  auto s = *fixtures::thin_transformation(id, shift);
  auto ks = whisker(shift, s);
  auto sk = whisker(s, shift);
  CHECK(check_nat(ks).ok());
  CHECK(check_nat(sk).ok());
  auto h = horizontal_compose(s, s);
  CHECK(check_nat(h).ok());
  // s * s = (s shift) o (id s) = (shift s) o (s id)
  CHECK(same_nat(h, vertical_compose(sk, s)));
  CHECK(same_nat(h, vertical_compose(ks, s)));
}

TEST_CASE("natural isomorphism search") {
  auto sk = fixtures::abelian_skeleton(4);
  Functor id = Functor::identity(sk.category);
  auto iso = find_natural_iso(id, id);
  REQUIRE(iso);
  CHECK(is_natural_isomorphism(*iso));
  CHECK(same_nat(*iso, NatTransform::identity(id)));
  CHECK(same_nat(inverse(*iso), *iso));

  Monad t = fixtures::tensor_monad(sk, "Z2");
  CHECK_FALSE(find_natural_iso(id, t.functor));
  CHECK(find_natural_iso(t.functor, compose(t.functor, t.functor)));
}

TEST_CASE("opposite functors and transformations") {
  auto c = fixtures::poset_category(fixtures::chain(3));
  Functor shift = fixtures::thin_functor(c, c, objs({1, 2, 2}));
  Functor op = opposite(shift);
  CHECK(check_functor(op).ok());
  CHECK(op.source.get() == c->opposite().get());
  auto s = *fixtures::thin_transformation(Functor::identity(c), shift);
  auto sop = opposite(s);
  CHECK(check_nat(sop).ok());
  CHECK(same_functor(sop.source, op));
}
