#include "catloc/functor.hpp"

#include <algorithm>
#include <functional>

#include "catloc/errors.hpp"

namespace catloc {

Functor Functor::identity(const CategoryPtr& cat) {
  return Functor{cat, cat, cat->objects(), cat->morphisms(), "Id"};
}

NatTransform NatTransform::identity(const Functor& f) {
  NatTransform t{f, f, {}, "id"};
  for (Obj x : f.source->objects()) t.components.push_back(f.target->identity(f(x)));
  return t;
}

LawReport check_functor(const Functor& f) {
  LawReport report;
  const auto& src = *f.source;
  const auto& tgt = *f.target;
  if (f.objects.size() != src.object_count() || f.morphisms.size() != src.morphism_count()) {
    report.add("functor table size", f.name);
    return report;
  }
  for (Obj x : src.objects()) {
    if (index(f(x)) >= tgt.object_count()) report.add("object image", src.name_of(x));
  }
  for (Mor m : src.morphisms()) {
    if (index(f(m)) >= tgt.morphism_count()) report.add("morphism image", src.name_of(m));
  }
  if (!report.ok()) return report;
  for (Mor m : src.morphisms()) {
    Mor image = f(m);
    if (tgt.source(image) != f(src.source(m)) || tgt.target(image) != f(src.target(m))) {
      report.add("preserves source/target", src.name_of(m) + " -> " + tgt.name_of(image));
    }
  }
  for (Obj x : src.objects()) {
    if (f(src.identity(x)) != tgt.identity(f(x))) report.add("preserves identities", src.name_of(x));
  }
  if (!report.ok()) return report;
  for (Mor m : src.morphisms()) {
    for (Obj c : src.objects()) {
      for (Mor n : src.hom(src.target(m), c)) {
        if (f(src.compose_unchecked(n, m)) != tgt.compose_unchecked(f(n), f(m))) {
          report.add("preserves composition", describe_pair(src, n, m));
        }
      }
    }
  }
  return report;
}

LawReport check_nat(const NatTransform& t) {
  LawReport report;
  if (!same_category(t.source.source, t.target.source) || !same_category(t.source.target, t.target.target)) {
    report.add("parallel functors", t.name);
    return report;
  }
  const auto& src = *t.source.source;
  const auto& tgt = *t.source.target;
  if (t.components.size() != src.object_count()) {
    report.add("component count", t.name);
    return report;
  }
  for (Obj x : src.objects()) {
    Mor c = t[x];
    if (index(c) >= tgt.morphism_count() || tgt.source(c) != t.source(x) || tgt.target(c) != t.target(x)) {
      report.add("component typing", src.name_of(x));
    }
  }
  if (!report.ok()) return report;
  for (Mor m : src.morphisms()) {
    Obj x = src.source(m);
    Obj y = src.target(m);
    if (tgt.compose_unchecked(t[y], t.source(m)) != tgt.compose_unchecked(t.target(m), t[x])) {
      report.add("naturality", src.name_of(m));
    }
  }
  return report;
}

bool same_functor(const Functor& a, const Functor& b) {
  return same_category(a.source, b.source) && same_category(a.target, b.target) && a.objects == b.objects &&
         a.morphisms == b.morphisms;
}

bool same_nat(const NatTransform& a, const NatTransform& b) {
  return same_functor(a.source, b.source) && same_functor(a.target, b.target) && a.components == b.components;
}

Functor compose(const Functor& g, const Functor& f) {
  if (!same_category(f.target, g.source)) {
    throw ShapeMismatch("compose: " + g.name + " o " + f.name + " do not share a middle category");
  }
  Functor out{f.source, g.target, {}, {}, g.name + f.name};
  out.objects.reserve(f.objects.size());
  for (Obj o : f.objects) out.objects.push_back(g(o));
  out.morphisms.reserve(f.morphisms.size());
  for (Mor m : f.morphisms) out.morphisms.push_back(g(m));
  return out;
}

NatTransform vertical_compose(const NatTransform& t, const NatTransform& s) {
  if (!same_functor(s.target, t.source)) {
    throw ShapeMismatch("vertical_compose: " + t.name + " o " + s.name + " do not share a middle functor");
  }
  NatTransform out{s.source, t.target, {}, t.name + "." + s.name};
  const auto& cat = *t.source.target;
  for (Obj x : s.source.source->objects()) out.components.push_back(cat.compose_unchecked(t[x], s[x]));
  return out;
}

NatTransform whisker(const Functor& k, const NatTransform& t) {
  if (!same_category(t.source.target, k.source)) {
    throw ShapeMismatch("whisker: " + k.name + " cannot follow " + t.name);
  }
  NatTransform out{compose(k, t.source), compose(k, t.target), {}, k.name + t.name};
  for (Mor c : t.components) out.components.push_back(k(c));
  return out;
}

NatTransform whisker(const NatTransform& t, const Functor& h) {
  if (!same_category(h.target, t.source.source)) {
    throw ShapeMismatch("whisker: " + t.name + " cannot follow " + h.name);
  }
  NatTransform out{compose(t.source, h), compose(t.target, h), {}, t.name + h.name};
  for (Obj x : h.source->objects()) out.components.push_back(t[h(x)]);
  return out;
}

NatTransform horizontal_compose(const NatTransform& t, const NatTransform& s) {
  // t_{GX} o F'(s_X)
  return vertical_compose(whisker(t, s.target), whisker(t.source, s));
}

Functor opposite(const Functor& f) {
  return Functor{f.source->opposite(), f.target->opposite(), f.objects, f.morphisms, f.name + "^op"};
}

NatTransform opposite(const NatTransform& t) {
  return NatTransform{opposite(t.target), opposite(t.source), t.components, t.name + "^op"};
}

bool is_natural_isomorphism(const NatTransform& t) {
  for (Mor c : t.components) {
    if (!t.source.target->is_isomorphism(c)) return false;
  }
  return true;
}

NatTransform inverse(const NatTransform& t) {
  NatTransform out{t.target, t.source, {}, t.name + "^-1"};
  for (Mor c : t.components) {
    auto inv = t.source.target->inverse(c);
    if (!inv) throw ShapeMismatch("inverse: " + t.name + " is not a natural isomorphism");
    out.components.push_back(*inv);
  }
  return out;
}

std::optional<NatTransform> find_natural_transformation(
    const Functor& f, const Functor& g, const std::function<std::vector<Mor>(Obj)>& candidates,
    const std::function<bool(const NatTransform&)>& accept) {
  if (!same_category(f.source, g.source) || !same_category(f.target, g.target)) {
    throw ShapeMismatch("natural transformation search: functors are not parallel");
  }
  const auto& src = *f.source;
  const auto& tgt = *f.target;
  const std::size_t n = src.object_count();

  // Morphisms whose endpoints are both assigned once object k is assigned.
  std::vector<std::vector<Mor>> closing(n);
  for (Mor m : src.morphisms()) {
    if (src.is_identity(m)) continue;
    std::size_t k = std::max(index(src.source(m)), index(src.target(m)));
    closing[k].push_back(m);
  }
  std::vector<std::vector<Mor>> options(n);
  for (Obj x : src.objects()) {
    options[index(x)] = candidates(x);
    if (options[index(x)].empty()) return std::nullopt;
  }

  std::vector<Mor> chosen(n, kNoMorphism);
  std::function<bool(std::size_t)> assign = [&](std::size_t k) -> bool {
    if (k == n) return !accept || accept(NatTransform{f, g, chosen, "theta"});
    for (Mor c : options[k]) {
      chosen[k] = c;
      bool consistent = true;
      for (Mor m : closing[k]) {
        Obj x = src.source(m);
        Obj y = src.target(m);
        if (tgt.compose_unchecked(chosen[index(y)], f(m)) != tgt.compose_unchecked(g(m), chosen[index(x)])) {
          consistent = false;
          break;
        }
      }
      if (consistent && assign(k + 1)) return true;
    }
    chosen[k] = kNoMorphism;
    return false;
  };
  if (!assign(0)) return std::nullopt;
  return NatTransform{f, g, chosen, "theta"};
}

std::optional<NatTransform> find_natural_iso(const Functor& f, const Functor& g) {
  const auto& tgt = *f.target;
  return find_natural_transformation(f, g, [&](Obj x) {
    std::vector<Mor> isos;
    for (Mor c : tgt.hom(f(x), g(x))) {
      if (tgt.is_isomorphism(c)) isos.push_back(c);
    }
    return isos;
  });
}

}  // namespace catloc
