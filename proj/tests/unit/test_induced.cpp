#include "catch_amalgamated.hpp"

#include "catloc/errors.hpp"
#include "catloc/fixtures.hpp"

using namespace catloc;

TEST_CASE("replete classes of skeletal categories") {
  CHECK(replete_classes(*fixtures::poset_category(fixtures::chain(3))).size() == 8);
  CHECK(replete_classes(*fixtures::abelian_skeleton(4).category).size() == 32);
}

TEST_CASE("induced localizations of closure monads match the pointwise criterion") {
  std::size_t yes = 0, no = 0;
  for (int n = 2; n <= 4; ++n) {
    for (const auto& p : fixtures::all_posets(n)) {
      auto cat = fixtures::poset_category(p);
      auto ops = fixtures::closure_operators(p);
      for (const auto& t : ops) {
        EMCategory em = eilenberg_moore(fixtures::closure_monad(cat, t));
        for (const auto& l : ops) {
          // T preserves L-equivalences: x <= y with l x = l y forces l t x = l t y
          bool expected = true;
          for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
              if (p.le(x, y) && l[x] == l[y] && l[t[x]] != l[t[y]]) expected = false;
          auto r = induce_localization(em, fixtures::closure_localization(cat, l));
          REQUIRE(r.cond_a == expected);
          REQUIRE(r.agree());
          REQUIRE(r.induced.has_value() == expected);
          if (r.induced) REQUIRE(check_localization(*r.induced).ok());
          (expected ? yes : no)++;
        }
      }
    }
  }
  CHECK(yes > 0);
  CHECK(no > 0);
}

TEST_CASE("inverting 0 -> Z3 lifts to Z/2-modules") {
  auto sk = fixtures::abelian_skeleton(8);
  Monad t = fixtures::tensor_monad(sk, "Z/2");
  EMCategory em = eilenberg_moore(t);
  Mor f = sk.category->hom(sk.object("0"), sk.object("Z3")).front();
  auto loc = *build_localization(sk.category, f);
  auto r = induce_localization(em, loc);
  CHECK(r.cond_a);
  CHECK(r.agree());
  for (const auto& a : em.algebras) CHECK(lift_algebra_structure(t, loc, a).size() == 1);

  auto readings = tensor_readings(em, f, Obj{1});
  CHECK(readings.coincide);
  CHECK(readings.base == sk.object("Z2"));
  CHECK(readings.to_module);
  CHECK(readings.to_underlying);
}

TEST_CASE("free image clauses on abelian groups of order at most 4") {
  auto sk = fixtures::abelian_skeleton(4);
  EMCategory em = eilenberg_moore(fixtures::tensor_monad(sk, "Z/2"));
  std::size_t testable = 0;
  for (Mor f : fixtures::enumerate_test_morphisms(*sk.category)) {
    auto r = free_image_theorem(em, f);
    if (!r.testable) continue;
    ++testable;
    CHECK(r.t_retract_of_tt);
    if (r.t_preserves_f_equivalences) {
      CHECK(r.free_localization_exists);
      CHECK(r.lfu_iso_ulff);
    }
    if (r.second_part_applies) {
      CHECK(r.t_preserves_tf_equivalences.value_or(false));
      CHECK(r.lfu_iso_ltfu.value_or(false));
      CHECK(r.ltf_iso_lttf.value_or(false));
    }
  }
  CHECK(testable > 0);
}

TEST_CASE("idempotent monad case for abelianization") {
  auto sk = fixtures::group_skeleton(6);
  Monad ab = fixtures::abelianization_monad(sk);
  IdempotentCaseSweep sweep(ab);
  CHECK(sweep.t_local() == sk.abelian_objects());
  std::size_t checked = 0;
  for (Mor f : fixtures::enumerate_test_morphisms(*sk.category)) {
    IdempotentCaseReport r;
    try {
      r = sweep(f);
    } catch (const Unsupported&) {
      continue;
    }
    if (!r.lf_preserves_s) continue;
    ++checked;
    CHECK(r.lfi_iso_ilkf.value_or(false));
    if (r.ltf_exists && r.ltf_preserves_s) CHECK(r.lfi_iso_ltfi.value_or(false));
  }
  CHECK(checked > 0);

  Mor sign = sk.category->hom(sk.object("S3"), sk.object("Z2")).back();
  auto r = idempotent_case(ab, sign);
  CHECK(r.t_local.contains(sk.object("Z2")));
  CHECK_FALSE(r.t_local.contains(sk.object("S3")));
}
