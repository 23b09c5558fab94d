#include "catloc/localization.hpp"

#include <algorithm>

#include "catloc/errors.hpp"

namespace catloc {

namespace {

/// True iff h |-> h o pre is injective from hom(mid, y) into hom(src, y),
/// assuming both hom-sets have equal size.
bool precomposition_injective(const FiniteCategory& cat, Mor pre, Obj y, std::vector<char>& seen) {
  auto from = cat.hom(cat.target(pre), y);
  auto to = cat.hom(cat.source(pre), y);
  seen.assign(to.size(), 0);
  for (Mor h : from) {
    auto slot = cat.local_index(cat.compose_unchecked(h, pre));
    if (seen[slot]) return false;
    seen[slot] = 1;
  }
  return true;
}

}  // namespace

Localization Localization::identity(const CategoryPtr& cat) {
  Functor id = Functor::identity(cat);
  ObjectSet all(cat->object_count());
  for (Obj o : cat->objects()) all.insert(o);
  return Localization{cat, id, NatTransform::identity(id), all, std::nullopt};
}

OrthoReport orthogonal(const FiniteCategory& cat, Mor f, Obj x) {
  if (index(f) >= cat.morphism_count() || index(x) >= cat.object_count()) {
    throw UnknownId("orthogonal: unknown id");
  }
  OrthoReport report{f, x, {}, false};
  auto from = cat.hom(cat.target(f), x);
  auto to = cat.hom(cat.source(f), x);
  std::vector<char> hit(to.size(), 0);
  bool injective = true;
  for (Mor h : from) {
    Mor image = cat.compose_unchecked(h, f);
    report.table.push_back(image);
    auto slot = cat.local_index(image);
    if (hit[slot]) injective = false;
    hit[slot] = 1;
  }
  bool surjective = std::find(hit.begin(), hit.end(), 0) == hit.end();
  report.is_bijection = injective && surjective;
  return report;
}

bool is_orthogonal(const FiniteCategory& cat, Mor f, Obj x) {
  if (cat.hom(cat.target(f), x).size() != cat.hom(cat.source(f), x).size()) return false;
  thread_local std::vector<char> seen;
  return precomposition_injective(cat, f, x, seen);
}

ObjectSet local_objects(const FiniteCategory& cat, Mor f) {
  if (index(f) >= cat.morphism_count()) throw UnknownId("local_objects: unknown morphism id");
  ObjectSet locals(cat.object_count());
  for (Obj x : cat.objects()) {
    if (is_orthogonal(cat, f, x)) locals.insert(x);
  }
  return locals;
}

bool is_equivalence(const FiniteCategory& cat, Mor g, const ObjectSet& locals) {
  if (index(g) >= cat.morphism_count()) throw UnknownId("is_equivalence: unknown morphism id");
  for (Obj x : locals.members()) {
    if (!is_orthogonal(cat, g, x)) return false;
  }
  return true;
}

std::vector<bool> equivalences(const FiniteCategory& cat, const ObjectSet& locals) {
  std::vector<bool> out(cat.morphism_count(), false);
  auto members = locals.members();
  for (Mor g : cat.morphisms()) {
    bool all = true;
    for (Obj x : members) {
      if (!is_orthogonal(cat, g, x)) {
        all = false;
        break;
      }
    }
    out[index(g)] = all;
  }
  return out;
}

ObjectSet orthogonal_objects(const FiniteCategory& cat, const std::vector<bool>& morphisms) {
  ObjectSet out(cat.object_count());
  for (Obj x : cat.objects()) {
    bool all = true;
    for (Mor g : cat.morphisms()) {
      if (morphisms[index(g)] && !is_orthogonal(cat, g, x)) {
        all = false;
        break;
      }
    }
    if (all) out.insert(x);
  }
  return out;
}

namespace {

template <class Visit>
void search_reflections(const FiniteCategory& cat, const ObjectSet& locals, Obj x, Visit&& visit) {
  auto members = locals.members();
  std::vector<char> seen;
  for (Obj candidate : members) {
    bool sizes_match = true;
    for (Obj y : members) {
      if (cat.hom(candidate, y).size() != cat.hom(x, y).size()) {
        sizes_match = false;
        break;
      }
    }
    if (!sizes_match) continue;
    for (Mor unit : cat.hom(x, candidate)) {
      bool universal = true;
      for (Obj y : members) {
        if (!precomposition_injective(cat, unit, y, seen)) {
          universal = false;
          break;
        }
      }
      if (universal && !visit(Reflection{candidate, unit})) return;
    }
  }
}

}  // namespace

std::optional<Reflection> reflect(const FiniteCategory& cat, const ObjectSet& locals, Obj x) {
  if (index(x) >= cat.object_count()) throw UnknownId("reflect: unknown object id");
  std::optional<Reflection> found;
  search_reflections(cat, locals, x, [&](Reflection r) {
    found = r;
    return false;
  });
  return found;
}

std::vector<Reflection> all_reflections(const FiniteCategory& cat, const ObjectSet& locals, Obj x) {
  std::vector<Reflection> found;
  search_reflections(cat, locals, x, [&](Reflection r) {
    found.push_back(r);
    return true;
  });
  return found;
}

std::optional<Localization> build_reflection(const CategoryPtr& cat_ptr, const ObjectSet& locals) {
  const auto& cat = *cat_ptr;
  Functor functor{cat_ptr, cat_ptr, {}, {}, "L"};
  std::vector<Mor> units;
  for (Obj x : cat.objects()) {
    auto r = reflect(cat, locals, x);
    if (!r) return std::nullopt;
    functor.objects.push_back(r->object);
    units.push_back(r->unit);
  }
  for (Mor g : cat.morphisms()) {
    Obj x = cat.source(g);
    Obj y = cat.target(g);
    Mor along = cat.compose_unchecked(units[index(y)], g);
    std::optional<Mor> lift;
    for (Mor h : cat.hom(functor(x), functor(y))) {
      if (cat.compose_unchecked(h, units[index(x)]) != along) continue;
      if (lift) throw TheoremViolation("reflection: lift of " + cat.name_of(g) + " is not unique");
      lift = h;
    }
    if (!lift) throw TheoremViolation("reflection: no lift of " + cat.name_of(g));
    functor.morphisms.push_back(*lift);
  }
  Localization loc{cat_ptr, functor, NatTransform{Functor::identity(cat_ptr), functor, units, "l"}, locals,
                   std::nullopt};
  auto report = check_localization(loc);
  if (!report.ok()) {
    throw TheoremViolation("reflection onto the given class fails " + report.violations.front().law + " at " +
                           report.violations.front().where);
  }
  return loc;
}

std::optional<Localization> build_localization(const CategoryPtr& cat, Mor f) {
  auto loc = build_reflection(cat, local_objects(*cat, f));
  if (loc) loc->generator = f;
  return loc;
}

std::optional<Localization> LocalizationCache::reflection(const ObjectSet& locals) {
  std::lock_guard lock(mutex_);
  auto it = cache_.find(locals);
  if (it == cache_.end()) it = cache_.emplace(locals, build_reflection(cat_, locals)).first;
  return it->second;
}

std::optional<Localization> LocalizationCache::localization(Mor f) {
  auto loc = reflection(local_objects(*cat_, f));
  if (loc) loc->generator = f;
  return loc;
}

std::size_t LocalizationCache::size() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

LawReport check_localization(const Localization& loc) {
  LawReport report;
  report.append(check_functor(loc.functor), "functor");
  if (!report.ok()) return report;
  report.append(check_nat(loc.unit), "unit");
  if (!report.ok()) return report;
  const auto& cat = *loc.category;
  for (Obj x : cat.objects()) {
    Obj lx = loc(x);
    Mor l = loc.unit[x];
    if (!loc.is_local(lx)) report.add("L lands in local objects", cat.name_of(x));
    if (!cat.is_isomorphism(loc.unit[lx])) report.add("l_{LX} is an isomorphism", cat.name_of(x));
    if (!cat.is_isomorphism(loc(l))) report.add("L(l_X) is an isomorphism", cat.name_of(x));
    if (loc.is_local(x) != cat.is_isomorphism(l)) report.add("X local iff l_X iso", cat.name_of(x));
  }
  return report;
}

std::optional<Localization> restrict_localization(const Localization& loc, const Subcategory& sub) {
  const auto& s = sub.category;
  Functor functor{s, s, {}, {}, loc.functor.name + "|"};
  std::vector<Mor> units;
  ObjectSet locals(s->object_count());
  for (Obj x : s->objects()) {
    Obj px = sub.object_in_parent[index(x)];
    auto image = sub.object_from_parent[index(loc(px))];
    if (!image) return std::nullopt;
    functor.objects.push_back(*image);
    units.push_back(*sub.morphism_from_parent[index(loc.unit[px])]);
    if (loc.is_local(px)) locals.insert(x);
  }
  for (Mor m : s->morphisms()) {
    functor.morphisms.push_back(*sub.morphism_from_parent[index(loc(sub.morphism_in_parent[index(m)]))]);
  }
  Localization out{s, functor, NatTransform{Functor::identity(s), functor, units, "l|"}, locals, std::nullopt};

  // S(LX, Y) = C(LX, Y) ~ C(X, Y) = S(X, Y) for local Y in S.
  for (Obj x : s->objects()) {
    for (Obj y : locals.members()) {
      if (!is_orthogonal(*s, units[index(x)], y)) {
        throw TheoremViolation("restricted unit at " + s->name_of(x) + " is not universal in the subcategory");
      }
    }
  }
  auto report = check_localization(out);
  if (!report.ok()) throw TheoremViolation("restricted localization fails " + report.violations.front().law);
  for (Obj x : s->objects()) {
    if (out.is_local(x) != loc.is_local(sub.object_in_parent[index(x)])) {
      throw TheoremViolation("inclusion does not preserve and reflect local objects");
    }
  }
  for (Mor m : s->morphisms()) {
    if (out.is_equivalence(m) != loc.is_equivalence(sub.morphism_in_parent[index(m)])) {
      throw TheoremViolation("inclusion does not preserve and reflect equivalences");
    }
  }
  return out;
}

std::vector<std::pair<Mor, Mor>> two_of_three_violations(const FiniteCategory& cat, const ObjectSet& locals) {
  auto eq = equivalences(cat, locals);
  std::vector<std::pair<Mor, Mor>> out;
  for (Mor f : cat.morphisms()) {
    if (cat.is_identity(f)) continue;
    for (Obj c : cat.objects()) {
      for (Mor g : cat.hom(cat.target(f), c)) {
        if (cat.is_identity(g)) continue;
        int count = eq[index(f)] + eq[index(g)] + eq[index(cat.compose_unchecked(g, f))];
        if (count == 2) out.emplace_back(g, f);
      }
    }
  }
  return out;
}

}  // namespace catloc
