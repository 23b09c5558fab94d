#include "catloc/duality.hpp"

#include <algorithm>

#include "catloc/errors.hpp"

namespace catloc {

Colocalization Colocalization::identity(const CategoryPtr& cat) {
  Functor id = Functor::identity(cat);
  ObjectSet all(cat->object_count());
  for (Obj o : cat->objects()) all.insert(o);
  return Colocalization{cat, id, NatTransform::identity(id), all, std::nullopt};
}

namespace {

/// h |-> post o h from hom(y, source(post)) to hom(y, target(post)) is injective.
bool postcomposition_injective(const FiniteCategory& cat, Mor post, Obj y, std::vector<char>& seen) {
  auto from = cat.hom(y, cat.source(post));
  auto to = cat.hom(y, cat.target(post));
  seen.assign(to.size(), 0);
  for (Mor h : from) {
    auto slot = cat.local_index(cat.compose_unchecked(post, h));
    if (seen[slot]) return false;
    seen[slot] = 1;
  }
  return true;
}

}  // namespace

CoOrthoReport co_orthogonal(const FiniteCategory& cat, Obj a, Mor g) {
  if (index(g) >= cat.morphism_count() || index(a) >= cat.object_count()) {
    throw UnknownId("co_orthogonal: unknown id");
  }
  CoOrthoReport report{a, g, {}, false};
  auto from = cat.hom(a, cat.source(g));
  auto to = cat.hom(a, cat.target(g));
  std::vector<char> hit(to.size(), 0);
  bool injective = true;
  for (Mor h : from) {
    Mor image = cat.compose_unchecked(g, h);
    report.table.push_back(image);
    auto slot = cat.local_index(image);
    if (hit[slot]) injective = false;
    hit[slot] = 1;
  }
  report.is_bijection = injective && std::find(hit.begin(), hit.end(), 0) == hit.end();
  return report;
}

bool is_co_orthogonal(const FiniteCategory& cat, Obj a, Mor g) {
  if (cat.hom(a, cat.source(g)).size() != cat.hom(a, cat.target(g)).size()) return false;
  thread_local std::vector<char> seen;
  return postcomposition_injective(cat, g, a, seen);
}

std::vector<bool> cellular_equivalences(const FiniteCategory& cat, Obj a) {
  if (index(a) >= cat.object_count()) throw UnknownId("cellular_equivalences: unknown object id");
  std::vector<bool> out(cat.morphism_count());
  for (Mor g : cat.morphisms()) out[index(g)] = is_co_orthogonal(cat, a, g);
  return out;
}

ObjectSet co_orthogonal_objects(const FiniteCategory& cat, const std::vector<bool>& morphisms) {
  ObjectSet out(cat.object_count());
  for (Obj x : cat.objects()) {
    bool all = true;
    for (Mor g : cat.morphisms()) {
      if (morphisms[index(g)] && !is_co_orthogonal(cat, x, g)) {
        all = false;
        break;
      }
    }
    if (all) out.insert(x);
  }
  return out;
}

ObjectSet cellular_objects(const FiniteCategory& cat, Obj a) {
  return co_orthogonal_objects(cat, cellular_equivalences(cat, a));
}

std::vector<bool> coequivalences(const FiniteCategory& cat, const ObjectSet& colocals) {
  std::vector<bool> out(cat.morphism_count(), false);
  auto members = colocals.members();
  for (Mor g : cat.morphisms()) {
    out[index(g)] = std::all_of(members.begin(), members.end(), [&](Obj x) { return is_co_orthogonal(cat, x, g); });
  }
  return out;
}

std::optional<Reflection> coreflect(const FiniteCategory& cat, const ObjectSet& colocals, Obj x) {
  if (index(x) >= cat.object_count()) throw UnknownId("coreflect: unknown object id");
  auto members = colocals.members();
  std::vector<char> seen;
  for (Obj candidate : members) {
    bool sizes_match = std::all_of(members.begin(), members.end(), [&](Obj y) {
      return cat.hom(y, candidate).size() == cat.hom(y, x).size();
    });
    if (!sizes_match) continue;
    for (Mor counit : cat.hom(candidate, x)) {
      bool universal = std::all_of(members.begin(), members.end(),
                                   [&](Obj y) { return postcomposition_injective(cat, counit, y, seen); });
      if (universal) return Reflection{candidate, counit};
    }
  }
  return std::nullopt;
}

std::optional<Colocalization> build_coreflection(const CategoryPtr& cat_ptr, const ObjectSet& colocals) {
  const auto& cat = *cat_ptr;
  Functor functor{cat_ptr, cat_ptr, {}, {}, "C"};
  std::vector<Mor> counits;
  for (Obj x : cat.objects()) {
    auto r = coreflect(cat, colocals, x);
    if (!r) return std::nullopt;
    functor.objects.push_back(r->object);
    counits.push_back(r->unit);
  }
  for (Mor g : cat.morphisms()) {
    Obj x = cat.source(g);
    Obj y = cat.target(g);
    Mor along = cat.compose_unchecked(g, counits[index(x)]);
    std::optional<Mor> lift;
    for (Mor h : cat.hom(functor(x), functor(y))) {
      if (cat.compose_unchecked(counits[index(y)], h) != along) continue;
      if (lift) throw TheoremViolation("coreflection: lift of " + cat.name_of(g) + " is not unique");
      lift = h;
    }
    if (!lift) throw TheoremViolation("coreflection: no lift of " + cat.name_of(g));
    functor.morphisms.push_back(*lift);
  }
  Colocalization col{cat_ptr, functor, NatTransform{functor, Functor::identity(cat_ptr), counits, "c"}, colocals,
                     std::nullopt};
  auto report = check_colocalization(col);
  if (!report.ok()) {
    throw TheoremViolation("coreflection onto the given class fails " + report.violations.front().law + " at " +
                           report.violations.front().where);
  }
  return col;
}

std::optional<Colocalization> build_cellularization(const CategoryPtr& cat, Obj a) {
  auto col = build_coreflection(cat, cellular_objects(*cat, a));
  if (col) col->generator = a;
  return col;
}

std::optional<Colocalization> transported_cellularization(const CategoryPtr& cat, Obj a) {
  CategoryPtr op = opposite(cat);
  // In the opposite category the A-equivalences are the morphisms orthogonal
  // to A, and the cellular objects are the objects orthogonal to those.
  ObjectSet just_a(op->object_count());
  just_a.insert(a);
  ObjectSet locals = orthogonal_objects(*op, equivalences(*op, just_a));
  auto loc = build_reflection(op, locals);
  if (!loc) return std::nullopt;
  auto col = dual_transport(*loc);
  col.generator = a;
  return col;
}

LawReport check_colocalization(const Colocalization& col) {
  LawReport report;
  report.append(check_functor(col.functor), "functor");
  if (!report.ok()) return report;
  report.append(check_nat(col.counit), "counit");
  if (!report.ok()) return report;
  const auto& cat = *col.category;
  for (Obj x : cat.objects()) {
    Obj cx = col(x);
    Mor c = col.counit[x];
    if (!col.is_colocal(cx)) report.add("C lands in colocal objects", cat.name_of(x));
    if (!cat.is_isomorphism(col.counit[cx])) report.add("c_{CX} is an isomorphism", cat.name_of(x));
    if (!cat.is_isomorphism(col(c))) report.add("C(c_X) is an isomorphism", cat.name_of(x));
    if (col.is_colocal(x) != cat.is_isomorphism(c)) report.add("X colocal iff c_X iso", cat.name_of(x));
  }
  return report;
}

Colocalization dual_transport(const Localization& on_opposite) {
  CategoryPtr cat = on_opposite.category->opposite();
  Functor functor = opposite(on_opposite.functor);
  functor.name = "C";
  NatTransform counit{functor, Functor::identity(cat), on_opposite.unit.components, "c"};
  return Colocalization{cat, functor, counit, on_opposite.local_objects, std::nullopt};
}

Localization to_opposite(const Colocalization& col) {
  CategoryPtr op = col.category->opposite();
  Functor functor = opposite(col.functor);
  functor.name = "L";
  NatTransform unit{Functor::identity(op), functor, col.counit.components, "l"};
  return Localization{op, functor, unit, col.colocal_objects, std::nullopt};
}

bool same_colocalization(const Colocalization& a, const Colocalization& b) {
  return same_category(a.category, b.category) && a.functor.objects == b.functor.objects &&
         a.functor.morphisms == b.functor.morphisms && a.counit.components == b.counit.components &&
         a.colocal_objects == b.colocal_objects;
}

namespace {

PredicateResult fail_at(Obj o) {
  PredicateResult r;
  r.holds = false;
  r.object_witness = o;
  return r;
}

PredicateResult fail_at(Mor m) {
  PredicateResult r;
  r.holds = false;
  r.morphism_witness = m;
  return r;
}

}  // namespace

PredicateResult preserves_colocal_objects(const Functor& f, const Colocalization& src, const Colocalization& tgt) {
  for (Obj x : f.source->objects()) {
    if (src.is_colocal(x) && !tgt.is_colocal(f(x))) return fail_at(x);
  }
  return {};
}

PredicateResult preserves_coequivalences(const Functor& f, const Colocalization& src, const Colocalization& tgt) {
  for (Mor g : f.source->morphisms()) {
    if (src.is_equivalence(g) && !tgt.is_equivalence(f(g))) return fail_at(g);
  }
  return {};
}

PredicateResult reflects_colocal_objects(const Functor& f, const Colocalization& src, const Colocalization& tgt) {
  for (Obj x : f.source->objects()) {
    if (tgt.is_colocal(f(x)) && !src.is_colocal(x)) return fail_at(x);
  }
  return {};
}

PredicateResult reflects_coequivalences(const Functor& f, const Colocalization& src, const Colocalization& tgt) {
  for (Mor g : f.source->morphisms()) {
    if (tgt.is_equivalence(f(g)) && !src.is_equivalence(g)) return fail_at(g);
  }
  return {};
}

namespace {

std::vector<NatTransform> collect(const Functor& from, const Functor& to,
                                  const std::function<std::vector<Mor>(Obj)>& candidates) {
  std::vector<NatTransform> out;
  find_natural_transformation(from, to, candidates, [&](const NatTransform& t) {
    out.push_back(t);
    return out.size() >= 2;
  });
  return out;
}

bool same_components(const std::vector<NatTransform>& a, const std::vector<NatTransform>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].components != b[i].components) return false;
  }
  return true;
}

}  // namespace

CoComparisonResult co_compare(const Functor& f, const Colocalization& src, const Colocalization& tgt) {
  if (!same_category(f.source, src.category) || !same_category(f.target, tgt.category)) {
    throw ShapeMismatch("co_compare: colocalizations do not live on the functor's categories");
  }
  const auto& c2 = *f.target;
  CoComparisonResult r;
  r.preserves_colocals = preserves_colocal_objects(f, src, tgt);
  r.preserves_equivalences = preserves_coequivalences(f, src, tgt);

  Functor fc = compose(f, src.functor);
  Functor cf = compose(tgt.functor, f);
  auto alphas = collect(fc, cf, [&](Obj x) {
    std::vector<Mor> out;
    for (Mor h : c2.hom(fc(x), cf(x))) {
      if (c2.compose_unchecked(tgt.counit[f(x)], h) == f(src.counit[x])) out.push_back(h);
    }
    return out;
  });
  auto betas = collect(cf, fc, [&](Obj x) {
    std::vector<Mor> out;
    for (Mor h : c2.hom(cf(x), fc(x))) {
      if (c2.compose_unchecked(f(src.counit[x]), h) == tgt.counit[f(x)] && tgt.is_equivalence(h)) out.push_back(h);
    }
    return out;
  });

  if (alphas.empty() == r.preserves_colocals.holds) {
    throw TheoremViolation("dual alpha existence disagrees with preservation of colocal objects for " + f.name);
  }
  if (betas.empty() == r.preserves_equivalences.holds) {
    throw TheoremViolation("dual beta existence disagrees with preservation of equivalences for " + f.name);
  }
  if (alphas.size() > 1 || betas.size() > 1) throw TheoremViolation("dual comparison map is not unique for " + f.name);
  if (!alphas.empty()) {
    r.alpha = alphas.front();
    r.alpha->name = "alpha";
    r.alpha_is_iso = is_natural_isomorphism(*r.alpha);
    if (r.alpha_is_iso != r.preserves_equivalences.holds) {
      throw TheoremViolation("dual alpha is invertible exactly when equivalences are preserved: fails for " + f.name);
    }
  }
  if (!betas.empty()) {
    r.beta = betas.front();
    r.beta->name = "beta";
    r.beta_is_iso = is_natural_isomorphism(*r.beta);
    if (r.beta_is_iso != r.preserves_colocals.holds) {
      throw TheoremViolation("dual beta is invertible exactly when colocal objects are preserved: fails for " + f.name);
    }
  }

  // The primal comparison on opposites: its beta is our alpha and vice versa.
  Functor fop = opposite(f);
  Localization lsrc = to_opposite(src);
  Localization ltgt = to_opposite(tgt);
  r.transport_agrees = same_components(alphas, beta_solutions(fop, lsrc, ltgt)) &&
                       same_components(betas, alpha_solutions(fop, lsrc, ltgt));
  if (!r.transport_agrees) throw TheoremViolation("dual comparison differs from the transported one for " + f.name);
  return r;
}

std::vector<Mor> colift_algebra_structure(const Monad& t, const Colocalization& col, const Algebra& algebra,
                                          std::size_t limit) {
  const auto& cat = *t.category();
  Obj x = algebra.carrier;
  Obj cx = col(x);
  Mor c = col.counit[x];
  Mor along = cat.compose_unchecked(algebra.structure, t(c));
  std::vector<Mor> out;
  for (Mor b : cat.hom(t(cx), cx)) {
    if (out.size() >= limit) break;
    if (cat.compose_unchecked(c, b) == along && is_algebra(t, cx, b)) out.push_back(b);
  }
  return out;
}

CoInducedReport evaluate_coinduced_conditions(const EMCategory& em, const Colocalization& col,
                                              const Budget& budget) {
  const Monad& t = em.monad;
  if (!same_category(t.category(), col.category)) {
    throw ShapeMismatch("coinduced colocalization: monad and colocalization live on different categories");
  }
  CoInducedReport r;
  r.cond_a = true;
  for (Obj x : col.category->objects()) {
    if (col.is_colocal(x) && !col.is_colocal(t(x))) {
      r.cond_a = false;
      r.a_witness = x;
      break;
    }
  }
  r.cond_b = true;
  for (Obj o : em.category->objects()) {
    if (colift_algebra_structure(t, col, em.algebra(o)).size() != 1) {
      r.cond_b = false;
      r.b_witness = o;
      break;
    }
  }
  const Functor& u = em.forgetful;
  Functor cu = compose(col.functor, u);
  for (const ObjectSet& cls : replete_classes(*em.category, budget)) {
    if (r.induced && r.reflected) break;
    auto candidate = build_coreflection(em.category, cls);
    if (!candidate) continue;
    if (!r.induced && find_natural_iso(cu, compose(u, candidate->functor))) r.induced = candidate;
    if (!r.reflected && preserves_colocal_objects(u, *candidate, col) &&
        reflects_colocal_objects(u, *candidate, col) && preserves_coequivalences(u, *candidate, col) &&
        reflects_coequivalences(u, *candidate, col)) {
      r.reflected = candidate;
    }
  }
  r.cond_c = r.induced.has_value();
  r.cond_d = r.reflected.has_value();
  return r;
}

CoInducedReport coinduce_colocalization(const EMCategory& em, const Colocalization& col, const Budget& budget) {
  auto r = evaluate_coinduced_conditions(em, col, budget);
  if (!r.agree()) {
    throw TheoremViolation("coinduced colocalization conditions disagree: a=" + std::to_string(r.cond_a) +
                           " b=" + std::to_string(r.cond_b) + " c=" + std::to_string(r.cond_c) +
                           " d=" + std::to_string(r.cond_d) + " for monad " + em.monad.name);
  }
  return r;
}

CoOrthogonalityReport co_orthogonality_along(const Adjunction& adj, Obj a) {
  const Functor& f = adj.left;
  const Functor& g = adj.right;
  const auto& c1 = *f.source;
  const auto& c2 = *f.target;
  Obj fa = f(a);
  CoOrthogonalityReport r;

  auto eq1 = cellular_equivalences(c1, a);
  auto eq2 = cellular_equivalences(c2, fa);
  r.equivalences_match = true;
  for (Mor m : c2.morphisms()) {
    if (eq2[index(m)] != eq1[index(g(m))]) r.equivalences_match = false;
  }
  if (!r.equivalences_match) throw TheoremViolation("FA-equivalences are not detected by G");

  auto cell1 = cellular_objects(c1, a);
  auto cell2 = co_orthogonal_objects(c2, eq2);
  r.cellular_preserved = true;
  for (Obj x : cell1.members()) {
    if (!cell2.contains(f(x))) r.cellular_preserved = false;
  }
  if (!r.cellular_preserved) throw TheoremViolation("F does not send A-cellular objects to FA-cellular objects");

  auto ca = build_cellularization(f.source, a);
  auto cfa = build_cellularization(f.target, fa);
  if (!ca || !cfa) return r;
  r.comparisons_tested = true;
  auto left = co_compare(f, *ca, *cfa);
  auto right = co_compare(g, *cfa, *ca);
  if (!left.alpha || !right.beta) throw TheoremViolation("cellular comparison maps along the adjunction are missing");
  r.alpha = left.alpha;
  r.beta = right.beta;
  r.alpha_is_iso = left.alpha_is_iso;
  r.beta_is_iso = right.beta_is_iso;
  return r;
}

CellularFreeImageReport cellular_free_image_theorem(const EMCategory& em, Obj a) {
  const Monad& t = em.monad;
  const CategoryPtr& c = t.category();
  const auto& cat = *c;
  const Functor& u = em.forgetful;
  CellularFreeImageReport r;
  auto ca = build_cellularization(c, a);
  if (!ca) {
    r.untestable.push_back("C_A does not exist");
    return r;
  }
  r.testable = true;
  auto preserves_cellular = [&](Obj gen) {
    auto cells = cellular_objects(cat, gen);
    for (Obj x : cells.members()) {
      if (!cells.contains(t(x))) return false;
    }
    return true;
  };
  r.t_preserves_cellular = preserves_cellular(a);
  auto cfa = build_cellularization(em.category, em.free(a));
  Functor cau = compose(ca->functor, u);
  r.cau_iso_ucfa = cfa && find_natural_iso(cau, compose(u, cfa->functor)).has_value();
  if (r.cau_iso_ucfa != r.t_preserves_cellular) {
    throw TheoremViolation("C_A U ~ U C_FA disagrees with T preserving A-cellular objects for " + cat.name_of(a));
  }

  auto eq = cellular_equivalences(cat, a);
  bool t_preserves_eq = true;
  for (Mor g : cat.morphisms()) {
    if (eq[index(g)] && !eq[index(t(g))]) t_preserves_eq = false;
  }
  auto cta = build_cellularization(c, t(a));
  if (!t_preserves_eq) {
    r.untestable.push_back("T does not preserve A-equivalences");
    return r;
  }
  if (!cta) {
    r.untestable.push_back("C_TA does not exist");
    return r;
  }
  r.second_part_applies = true;
  bool pa = preserves_cellular(t(a));
  r.t_preserves_ta_cellular = pa;
  r.cau_iso_ctau = find_natural_iso(cau, compose(cta->functor, u)).has_value();
  auto ctta = build_cellularization(c, t(t(a)));
  r.cta_iso_ctta = ctta && find_natural_iso(cta->functor, ctta->functor).has_value();
  if (pa != *r.cau_iso_ctau || pa != *r.cta_iso_ctta) {
    throw TheoremViolation("cellular second part disagrees for " + cat.name_of(a) + ": a=" + std::to_string(pa) +
                           " b=" + std::to_string(*r.cau_iso_ctau) + " c=" + std::to_string(*r.cta_iso_ctta));
  }
  return r;
}

namespace {

std::optional<Mor> iso_over(const FiniteCategory& cat, Mor from_counit, Mor to_counit) {
  for (Mor h : cat.hom(cat.source(from_counit), cat.source(to_counit))) {
    if (cat.is_isomorphism(h) && cat.compose_unchecked(to_counit, h) == from_counit) return h;
  }
  return std::nullopt;
}

}  // namespace

CellularReadings cellular_readings(const EMCategory& em, Obj a, Obj module) {
  const Monad& t = em.monad;
  const auto& cat = *t.category();
  const Functor& u = em.forgetful;
  Obj fa = em.free(a);
  auto ca = build_cellularization(t.category(), a);
  auto cfa = build_cellularization(em.category, fa);
  auto cufa = build_cellularization(t.category(), u(fa));
  if (!ca || !cfa || !cufa) throw Unsupported("cellular readings need C_A, C_FA and C_UFA to exist");
  Obj um = u(module);
  Mor base_counit = ca->counit[um];
  Mor module_counit = u(cfa->counit[module]);
  Mor under_counit = cufa->counit[um];
  CellularReadings r;
  r.base = cat.source(base_counit);
  r.module_reading = cat.source(module_counit);
  r.underlying = cat.source(under_counit);
  r.to_module = iso_over(cat, base_counit, module_counit);
  r.to_underlying = iso_over(cat, base_counit, under_counit);
  r.coincide = r.to_module && r.to_underlying;
  return r;
}

}  // namespace catloc
