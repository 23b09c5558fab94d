#include "catloc/induced.hpp"

#include <numeric>

#include "catloc/errors.hpp"

namespace catloc {

PredicateResult monad_preserves_equivalences(const Monad& t, const Localization& loc) {
  return preserves_equivalences(t.functor, loc, loc);
}

std::vector<Mor> lift_algebra_structure(const Monad& t, const Localization& loc, const Algebra& algebra,
                                        std::size_t limit) {
  const auto& cat = *t.category();
  Obj x = algebra.carrier;
  Obj lx = loc(x);
  Mor l = loc.unit[x];
  Mor along = cat.compose_unchecked(l, algebra.structure);
  Mor tl = t(l);
  std::vector<Mor> out;
  for (Mor b : cat.hom(t(lx), lx)) {
    if (out.size() >= limit) break;
    if (cat.compose_unchecked(b, tl) == along && is_algebra(t, lx, b)) out.push_back(b);
  }
  return out;
}

std::vector<ObjectSet> replete_classes(const FiniteCategory& cat, const Budget& budget) {
  const std::size_t n = cat.object_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (Obj a : cat.objects()) {
    for (Obj b : cat.objects()) {
      if (index(a) >= index(b)) continue;
      for (Mor m : cat.hom(a, b)) {
        if (cat.is_isomorphism(m)) {
          std::size_t ra = find(index(a)), rb = find(index(b));
          if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
          break;
        }
      }
    }
  }
  std::vector<std::vector<Obj>> classes;
  std::vector<int> slot(n, -1);
  for (Obj o : cat.objects()) {
    std::size_t r = find(index(o));
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(classes.size());
      classes.emplace_back();
    }
    classes[slot[r]].push_back(o);
  }
  const std::size_t k = classes.size();
  if (k >= 63 || (std::size_t{1} << k) > budget.max_class_candidates) {
    throw BudgetExceeded("enumerating replete classes of " + cat.name() + " needs 2^" + std::to_string(k) +
                         " candidates");
  }
  std::vector<ObjectSet> out;
  out.reserve(std::size_t{1} << k);
  for (std::size_t bits = 0; bits < (std::size_t{1} << k); ++bits) {
    ObjectSet s(n);
    for (std::size_t c = 0; c < k; ++c) {
      if (bits & (std::size_t{1} << c)) {
        for (Obj o : classes[c]) s.insert(o);
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

InducedLocalizationReport evaluate_induced_conditions(const EMCategory& em, const Localization& loc,
                                                      const Budget& budget) {
  const Monad& t = em.monad;
  if (!same_category(t.category(), loc.category)) {
    throw ShapeMismatch("induced localization: monad and localization live on different categories");
  }
  InducedLocalizationReport r;

  // (a)
  r.a_witness = monad_preserves_equivalences(t, loc);
  r.cond_a = r.a_witness.holds;

  // (b)
  r.cond_b = true;
  for (Obj o : em.category->objects()) {
    auto lifts = lift_algebra_structure(t, loc, em.algebra(o));
    if (lifts.size() == 1) {
      r.algebra_structures.push_back(lifts.front());
    } else {
      r.algebra_structures.push_back(std::nullopt);
      if (r.cond_b) r.b_witness = o;
      r.cond_b = false;
    }
  }

  // (c) and (d): search over every replete class of algebras.
  const Functor& u = em.forgetful;
  Functor lu = compose(loc.functor, u);
  for (const ObjectSet& cls : replete_classes(*em.category, budget)) {
    if (r.induced && r.reflected) break;
    auto candidate = build_reflection(em.category, cls);
    ++r.classes_examined;
    if (!candidate) continue;
    if (!r.induced) {
      auto iso = find_natural_iso(lu, compose(u, candidate->functor));
      if (iso) {
        r.induced = candidate;
        r.lu_iso = iso;
      }
    }
    if (!r.reflected) {
      if (preserves_local_objects(u, *candidate, loc) && reflects_local_objects(u, *candidate, loc) &&
          preserves_equivalences(u, *candidate, loc) && reflects_equivalences(u, *candidate, loc)) {
        r.reflected = candidate;
      }
    }
  }
  r.cond_c = r.induced.has_value();
  r.cond_d = r.reflected.has_value();
  return r;
}

InducedLocalizationReport induce_localization(const EMCategory& em, const Localization& loc, const Budget& budget) {
  auto r = evaluate_induced_conditions(em, loc, budget);
  if (!r.agree()) {
    throw TheoremViolation("induced localization conditions disagree: a=" + std::to_string(r.cond_a) +
                           " b=" + std::to_string(r.cond_b) + " c=" + std::to_string(r.cond_c) +
                           " d=" + std::to_string(r.cond_d) + " for monad " + em.monad.name);
  }
  return r;
}

namespace {

bool same_local_class(const FiniteCategory& cat, Mor a, Mor b) {
  return local_objects(cat, a) == local_objects(cat, b);
}

}  // namespace

FreeImageReport free_image_theorem(const EMCategory& em, Mor f) {
  const Monad& t = em.monad;
  const CategoryPtr& c = t.category();
  const CategoryPtr& ct = em.category;
  const Functor& u = em.forgetful;
  FreeImageReport r;

  const auto& cat = *c;
  for (Obj x : cat.objects()) {
    if (cat.compose_unchecked(t.mult[x], t.unit[t(x)]) != cat.identity(t(x))) {
      throw TheoremViolation("mu o eta T is not the identity at " + cat.name_of(x));
    }
  }
  r.t_retract_of_tt = true;

  auto lf = build_localization(c, f);
  if (!lf) {
    r.untestable.push_back("L_f does not exist");
    return r;
  }
  r.testable = true;
  Mor ff = em.free_image(f);
  Mor tf = t(f);
  Mor ftf = em.free_image(tf);

  // (i)
  r.t_preserves_f_equivalences = monad_preserves_equivalences(t, *lf).holds;
  auto lff = build_localization(ct, ff);
  r.free_localization_exists = lff.has_value();
  Functor lfu = compose(lf->functor, u);
  if (lff) r.lfu_iso_ulff = find_natural_iso(lfu, compose(u, lff->functor)).has_value();
  if (r.lfu_iso_ulff != r.t_preserves_f_equivalences) {
    throw TheoremViolation("L_f U ~ U L_Ff disagrees with T preserving f-equivalences for " + cat.name_of(f));
  }

  // Ff is an FTf-equivalence: F is a retract of FUF.
  r.ff_is_ftf_equivalence = is_equivalence(*ct, ff, local_objects(*ct, ftf));
  if (!*r.ff_is_ftf_equivalence) throw TheoremViolation("Ff is not an FTf-equivalence for " + cat.name_of(f));

  if (r.t_preserves_f_equivalences) {
    r.tf_is_f_equivalence = lf->is_equivalence(tf);
    if (!*r.tf_is_f_equivalence) throw TheoremViolation("Tf is not an f-equivalence for " + cat.name_of(f));
  }

  // (ii)
  auto ltf = build_localization(c, tf);
  if (!ltf) {
    r.untestable.push_back("L_Tf does not exist");
    return r;
  }
  if (!r.t_preserves_f_equivalences) {
    r.untestable.push_back("T does not preserve f-equivalences");
    return r;
  }
  r.second_part_applies = true;
  bool a = monad_preserves_equivalences(t, *ltf).holds;
  r.t_preserves_tf_equivalences = a;
  r.lfu_iso_ltfu = find_natural_iso(lfu, compose(ltf->functor, u)).has_value();
  auto lttf = build_localization(c, t(tf));
  r.ltf_iso_lttf = lttf && find_natural_iso(ltf->functor, lttf->functor).has_value();
  if (a != *r.lfu_iso_ltfu || a != *r.ltf_iso_lttf) {
    throw TheoremViolation("second part disagrees for " + cat.name_of(f) + ": a=" + std::to_string(a) +
                           " b=" + std::to_string(*r.lfu_iso_ltfu) + " c=" + std::to_string(*r.ltf_iso_lttf));
  }
  if (a) {
    r.lff_same_as_lftf = same_local_class(*ct, ff, ftf);
    if (!*r.lff_same_as_lftf) throw TheoremViolation("Ff-local and FTf-local classes differ for " + cat.name_of(f));
  }
  return r;
}

namespace {

std::optional<Mor> iso_under(const FiniteCategory& cat, Mor from_unit, Mor to_unit) {
  for (Mor h : cat.hom(cat.target(from_unit), cat.target(to_unit))) {
    if (cat.is_isomorphism(h) && cat.compose_unchecked(h, from_unit) == to_unit) return h;
  }
  return std::nullopt;
}

}  // namespace

TensorReadings tensor_readings(const EMCategory& em, Mor f, Obj module) {
  const Monad& t = em.monad;
  const auto& cat = *t.category();
  const Functor& u = em.forgetful;
  auto lf = build_localization(t.category(), f);
  auto lff = build_localization(em.category, em.free_image(f));
  auto ltf = build_localization(t.category(), u(em.free_image(f)));
  if (!lf || !lff || !ltf) throw Unsupported("tensor readings need L_f, L_Ff and L_UFf to exist");
  Obj um = u(module);
  TensorReadings r;
  Mor base_unit = lf->unit[um];
  Mor module_unit = u(lff->unit[module]);
  Mor under_unit = ltf->unit[um];
  r.base = cat.target(base_unit);
  r.module_reading = cat.target(module_unit);
  r.underlying = cat.target(under_unit);
  r.to_module = iso_under(cat, base_unit, module_unit);
  r.to_underlying = iso_under(cat, base_unit, under_unit);
  r.coincide = r.to_module && r.to_underlying;
  return r;
}

namespace {

ObjectSet unit_isos(const Monad& t) {
  if (!is_idempotent(t)) throw Unsupported("idempotent_case: monad " + t.name + " is not idempotent");
  const auto& cat = *t.category();
  ObjectSet s(cat.object_count());
  for (Obj x : cat.objects()) {
    if (cat.is_isomorphism(t.unit[x])) s.insert(x);
  }
  return s;
}

}  // namespace

IdempotentCaseSweep::IdempotentCaseSweep(const Monad& t)
    : t_(t),
      t_local_(unit_isos(t)),
      s_(full_subcategory(t.category(), t_local_, t.category()->name() + "_T")),
      incl_{s_.category, t.category(), s_.object_in_parent, s_.morphism_in_parent, "I"},
      ambient_(t.category()),
      restricted_(s_.category) {}

IdempotentCaseReport IdempotentCaseSweep::operator()(Mor f) {
  const auto& cat = *t_.category();
  auto lf = ambient_.localization(f);
  if (!lf) throw Unsupported("idempotent_case: L_f does not exist for " + cat.name_of(f));

  IdempotentCaseReport r;
  r.t_local = t_local_;
  auto preserves = [&](const Localization& loc) {
    for (Obj a : t_local_.members()) {
      if (!t_local_.contains(loc(a))) return false;
    }
    return true;
  };
  r.lf_preserves_s = preserves(*lf);
  Functor lfi = compose(lf->functor, incl_);
  if (r.lf_preserves_s) {
    auto kf = s_.morphism_from_parent[index(t_(f))];
    if (!kf) throw TheoremViolation("T f does not land in the T-local subcategory");
    auto lkf = restricted_.localization(*kf);
    r.lfi_iso_ilkf = lkf && find_natural_iso(lfi, compose(incl_, lkf->functor)).has_value();
    if (!*r.lfi_iso_ilkf) throw TheoremViolation("L_f I is not isomorphic to I L_Kf for " + cat.name_of(f));
  }
  auto ltf = ambient_.localization(t_(f));
  r.ltf_exists = ltf.has_value();
  if (ltf) {
    r.ltf_preserves_s = preserves(*ltf);
    for (Obj a : t_local_.members()) r.table.emplace_back((*lf)(a), (*ltf)(a));
    if (r.lf_preserves_s && r.ltf_preserves_s) {
      r.lfi_iso_ltfi = find_natural_iso(lfi, compose(ltf->functor, incl_)).has_value();
      if (!*r.lfi_iso_ltfi) throw TheoremViolation("L_f I is not isomorphic to L_Tf I for " + cat.name_of(f));
    }
  }
  return r;
}

IdempotentCaseReport idempotent_case(const Monad& t, Mor f) { return IdempotentCaseSweep(t)(f); }

}  // namespace catloc
