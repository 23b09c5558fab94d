#include "catloc/adjunction.hpp"

#include "catloc/errors.hpp"

namespace catloc {

Adjunction Adjunction::identity(const CategoryPtr& cat) {
  Functor id = Functor::identity(cat);
  return Adjunction{id, id, NatTransform::identity(id), NatTransform::identity(id), "Id-|Id"};
}

LawReport check_adjunction(const Adjunction& adj) {
  LawReport report;
  report.append(check_functor(adj.left), "left adjoint");
  report.append(check_functor(adj.right), "right adjoint");
  if (!report.ok()) return report;
  if (!same_category(adj.left.source, adj.right.target) || !same_category(adj.left.target, adj.right.source)) {
    report.add("adjoint shapes", adj.name);
    return report;
  }
  Functor gf = compose(adj.right, adj.left);
  Functor fg = compose(adj.left, adj.right);
  if (!same_functor(adj.unit.source, Functor::identity(adj.left.source)) || !same_functor(adj.unit.target, gf)) {
    report.add("unit shape", "eta must be Id => GF");
  }
  if (!same_functor(adj.counit.source, fg) || !same_functor(adj.counit.target, Functor::identity(adj.left.target))) {
    report.add("counit shape", "eps must be FG => Id");
  }
  if (!report.ok()) return report;
  report.append(check_nat(adj.unit), "unit");
  report.append(check_nat(adj.counit), "counit");
  if (!report.ok()) return report;

  const auto& c1 = *adj.left.source;
  const auto& c2 = *adj.left.target;
  for (Obj x : c1.objects()) {
    Obj fx = adj.left(x);
    if (c2.compose_unchecked(adj.counit[fx], adj.left(adj.unit[x])) != c2.identity(fx)) {
      report.add("triangle identity eps_F o F eta = id", c1.name_of(x));
    }
  }
  for (Obj y : c2.objects()) {
    Obj gy = adj.right(y);
    if (c1.compose_unchecked(adj.right(adj.counit[y]), adj.unit[gy]) != c1.identity(gy)) {
      report.add("triangle identity G eps o eta_G = id", c2.name_of(y));
    }
  }
  return report;
}

Mor transpose_to_right(const Adjunction& adj, Obj x, Mor phi) {
  const auto& c1 = *adj.left.source;
  const auto& c2 = *adj.left.target;
  if (c2.source(phi) != adj.left(x)) {
    throw ShapeMismatch("transpose: " + c2.name_of(phi) + " does not start at F(" + c1.name_of(x) + ")");
  }
  return c1.compose_unchecked(adj.right(phi), adj.unit[x]);
}

Mor transpose_to_left(const Adjunction& adj, Obj y, Mor psi) {
  const auto& c1 = *adj.left.source;
  const auto& c2 = *adj.left.target;
  if (c1.target(psi) != adj.right(y)) {
    throw ShapeMismatch("transpose: " + c1.name_of(psi) + " does not end at G(" + c2.name_of(y) + ")");
  }
  return c2.compose_unchecked(adj.counit[y], adj.left(psi));
}

namespace {

Functor restrict_functor(const Functor& f, const Subcategory& from, const Subcategory& to, bool& lands) {
  Functor out{from.category, to.category, {}, {}, f.name + "|"};
  for (Obj x : from.category->objects()) {
    auto image = to.object_from_parent[index(f(from.object_in_parent[index(x)]))];
    if (!image) {
      lands = false;
      return out;
    }
    out.objects.push_back(*image);
  }
  for (Mor m : from.category->morphisms()) {
    auto image = to.morphism_from_parent[index(f(from.morphism_in_parent[index(m)]))];
    if (!image) {
      lands = false;
      return out;
    }
    out.morphisms.push_back(*image);
  }
  return out;
}

}  // namespace

RestrictedEquivalence restricted_equivalence(const Adjunction& adj) {
  const auto& c1 = adj.left.source;
  const auto& c2 = adj.left.target;
  ObjectSet unit_iso(c1->object_count());
  for (Obj x : c1->objects()) {
    if (c1->is_isomorphism(adj.unit[x])) unit_iso.insert(x);
  }
  ObjectSet counit_iso(c2->object_count());
  for (Obj y : c2->objects()) {
    if (c2->is_isomorphism(adj.counit[y])) counit_iso.insert(y);
  }
  RestrictedEquivalence out;
  out.unit_part = full_subcategory(c1, unit_iso, c1->name() + "_eta");
  out.counit_part = full_subcategory(c2, counit_iso, c2->name() + "_eps");
  bool lands = true;
  out.left = restrict_functor(adj.left, out.unit_part, out.counit_part, lands);
  if (lands) out.right = restrict_functor(adj.right, out.counit_part, out.unit_part, lands);
  if (!lands) return out;

  out.unit = NatTransform{Functor::identity(out.unit_part.category), compose(out.right, out.left), {}, "eta|"};
  for (Obj x : out.unit_part.category->objects()) {
    out.unit.components.push_back(*out.unit_part.morphism_from_parent[index(adj.unit[out.unit_part.object_in_parent[index(x)]])]);
  }
  out.counit = NatTransform{compose(out.left, out.right), Functor::identity(out.counit_part.category), {}, "eps|"};
  for (Obj y : out.counit_part.category->objects()) {
    out.counit.components.push_back(
        *out.counit_part.morphism_from_parent[index(adj.counit[out.counit_part.object_in_parent[index(y)]])]);
  }
  out.is_equivalence = is_natural_isomorphism(out.unit) && is_natural_isomorphism(out.counit) &&
                       check_nat(out.unit).ok() && check_nat(out.counit).ok();
  return out;
}

}  // namespace catloc
