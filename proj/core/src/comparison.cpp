#include "catloc/comparison.hpp"

#include "catloc/errors.hpp"

namespace catloc {

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

void require_shapes(const Functor& f, const Localization& src, const Localization& tgt, const char* what) {
  if (!same_category(f.source, src.category) || !same_category(f.target, tgt.category)) {
    throw ShapeMismatch(std::string(what) + ": localizations do not live on the functor's categories");
  }
}

std::vector<NatTransform> collect(const Functor& from, const Functor& to,
                                  const std::function<std::vector<Mor>(Obj)>& candidates, std::size_t limit) {
  std::vector<NatTransform> out;
  if (limit == 0) return out;
  find_natural_transformation(from, to, candidates, [&](const NatTransform& t) {
    out.push_back(t);
    return out.size() >= limit;
  });
  return out;
}

}  // namespace

PredicateResult preserves_local_objects(const Functor& f, const Localization& src, const Localization& tgt) {
  require_shapes(f, src, tgt, "preserves_local_objects");
  for (Obj x : f.source->objects()) {
    if (src.is_local(x) && !tgt.is_local(f(x))) return fail_at(x);
  }
  return {};
}

PredicateResult preserves_equivalences(const Functor& f, const Localization& src, const Localization& tgt) {
  require_shapes(f, src, tgt, "preserves_equivalences");
  for (Mor g : f.source->morphisms()) {
    if (src.is_equivalence(g) && !tgt.is_equivalence(f(g))) return fail_at(g);
  }
  return {};
}

PredicateResult reflects_local_objects(const Functor& f, const Localization& src, const Localization& tgt) {
  require_shapes(f, src, tgt, "reflects_local_objects");
  for (Obj x : f.source->objects()) {
    if (tgt.is_local(f(x)) && !src.is_local(x)) return fail_at(x);
  }
  return {};
}

PredicateResult reflects_equivalences(const Functor& f, const Localization& src, const Localization& tgt) {
  require_shapes(f, src, tgt, "reflects_equivalences");
  for (Mor g : f.source->morphisms()) {
    if (tgt.is_equivalence(f(g)) && !src.is_equivalence(g)) return fail_at(g);
  }
  return {};
}

std::vector<NatTransform> alpha_solutions(const Functor& f, const Localization& src, const Localization& tgt,
                                          std::size_t limit) {
  require_shapes(f, src, tgt, "alpha");
  const auto& c2 = *f.target;
  Functor from = compose(f, src.functor);
  Functor to = compose(tgt.functor, f);
  auto out = collect(
      from, to,
      [&](Obj x) {
        Mor fl = f(src.unit[x]);
        Mor l2 = tgt.unit[f(x)];
        std::vector<Mor> found;
        for (Mor h : c2.hom(from(x), to(x))) {
          if (c2.compose_unchecked(h, fl) == l2 && tgt.is_equivalence(h)) found.push_back(h);
        }
        return found;
      },
      limit);
  for (auto& t : out) t.name = "alpha";
  return out;
}

std::vector<NatTransform> beta_solutions(const Functor& f, const Localization& src, const Localization& tgt,
                                         std::size_t limit) {
  require_shapes(f, src, tgt, "beta");
  const auto& c2 = *f.target;
  Functor from = compose(tgt.functor, f);
  Functor to = compose(f, src.functor);
  auto out = collect(
      from, to,
      [&](Obj x) {
        Mor fl = f(src.unit[x]);
        Mor l2 = tgt.unit[f(x)];
        std::vector<Mor> found;
        for (Mor h : c2.hom(from(x), to(x))) {
          if (c2.compose_unchecked(h, l2) == fl) found.push_back(h);
        }
        return found;
      },
      limit);
  for (auto& t : out) t.name = "beta";
  return out;
}

std::optional<NatTransform> build_alpha(const Functor& f, const Localization& src, const Localization& tgt) {
  bool predicate = preserves_equivalences(f, src, tgt).holds;
  auto found = alpha_solutions(f, src, tgt);
  if (!predicate) {
    if (!found.empty()) throw TheoremViolation("alpha exists although " + f.name + " does not preserve equivalences");
    return std::nullopt;
  }
  if (found.size() != 1) {
    throw TheoremViolation("alpha for " + f.name + (found.empty() ? " does not exist" : " is not unique"));
  }
  return found.front();
}

std::optional<NatTransform> build_beta(const Functor& f, const Localization& src, const Localization& tgt) {
  bool predicate = preserves_local_objects(f, src, tgt).holds;
  auto found = beta_solutions(f, src, tgt);
  if (!predicate) {
    if (!found.empty()) throw TheoremViolation("beta exists although " + f.name + " does not preserve local objects");
    return std::nullopt;
  }
  if (found.size() != 1) {
    throw TheoremViolation("beta for " + f.name + (found.empty() ? " does not exist" : " is not unique"));
  }
  return found.front();
}

bool check_mutually_inverse(const NatTransform& alpha, const NatTransform& beta) {
  if (!same_functor(alpha.source, beta.target) || !same_functor(alpha.target, beta.source)) {
    throw ShapeMismatch("check_mutually_inverse: transformations are not opposite");
  }
  const auto& cat = *alpha.source.target;
  for (Obj x : alpha.source.source->objects()) {
    if (cat.compose_unchecked(alpha[x], beta[x]) != cat.identity(alpha.target(x))) return false;
    if (cat.compose_unchecked(beta[x], alpha[x]) != cat.identity(alpha.source(x))) return false;
  }
  return true;
}

ComparisonResult compare(const Functor& f, const Localization& src, const Localization& tgt) {
  ComparisonResult r;
  r.preserves_locals = preserves_local_objects(f, src, tgt);
  r.preserves_equivalences = preserves_equivalences(f, src, tgt);
  r.alpha = build_alpha(f, src, tgt);
  r.beta = build_beta(f, src, tgt);
  if (r.alpha) {
    r.alpha_is_iso = is_natural_isomorphism(*r.alpha);
    if (r.alpha_is_iso != r.preserves_locals.holds) {
      throw TheoremViolation("alpha for " + f.name + " is invertible exactly when local objects are preserved: fails");
    }
  }
  if (r.beta) {
    r.beta_is_iso = is_natural_isomorphism(*r.beta);
    if (r.beta_is_iso != r.preserves_equivalences.holds) {
      throw TheoremViolation("beta for " + f.name + " is invertible exactly when equivalences are preserved: fails");
    }
  }
  r.naturally_isomorphic = find_natural_iso(compose(tgt.functor, f), compose(f, src.functor)).has_value();
  bool both = r.preserves_locals.holds && r.preserves_equivalences.holds;
  if (r.naturally_isomorphic != both) {
    throw TheoremViolation("L2 F and F L1 are isomorphic exactly when both predicates hold: fails for " + f.name);
  }
  if (both) {
    r.mutually_inverse = check_mutually_inverse(*r.alpha, *r.beta);
    if (!r.mutually_inverse) throw TheoremViolation("alpha and beta are not mutually inverse for " + f.name);
  }
  return r;
}

std::optional<NatTransform> left_comparison(const Adjunction& adj, const Localization& l1, const Localization& l2) {
  return build_alpha(adj.left, l1, l2);
}

std::optional<NatTransform> right_comparison(const Adjunction& adj, const Localization& l1, const Localization& l2) {
  return build_beta(adj.right, l2, l1);
}

NatTransform mate_of(const NatTransform& alpha, const Adjunction& adj, const Localization& l1,
                     const Localization& l2) {
  const Functor& g = adj.right;
  NatTransform first = whisker(adj.unit, compose(l1.functor, g));
  NatTransform second = whisker(g, whisker(alpha, g));
  NatTransform third = whisker(compose(g, l2.functor), adj.counit);
  NatTransform beta = vertical_compose(third, vertical_compose(second, first));
  beta.source = compose(l1.functor, g);
  beta.target = compose(g, l2.functor);
  beta.name = "mate(" + alpha.name + ")";
  return beta;
}

NatTransform mate_inverse(const NatTransform& beta, const Adjunction& adj, const Localization& l1,
                          const Localization& l2) {
  const Functor& f = adj.left;
  NatTransform first = whisker(compose(f, l1.functor), adj.unit);
  NatTransform second = whisker(f, whisker(beta, f));
  NatTransform third = whisker(adj.counit, compose(l2.functor, f));
  NatTransform alpha = vertical_compose(third, vertical_compose(second, first));
  alpha.source = compose(f, l1.functor);
  alpha.target = compose(l2.functor, f);
  alpha.name = "mate^-1(" + beta.name + ")";
  return alpha;
}

namespace {

bool below(const FiniteCategory& cat, Obj a, Obj b) { return !cat.hom(a, b).empty(); }

Obj bound(const FiniteCategory& cat, const std::vector<Obj>& objects, bool upper) {
  if (!is_thin(cat)) throw Unsupported(cat.name() + " is not thin; joins are only computed in posets");
  if (objects.empty()) throw Unsupported("bound of an empty family");
  auto le = [&](Obj a, Obj b) { return upper ? below(cat, a, b) : below(cat, b, a); };
  std::vector<Obj> bounds;
  for (Obj u : cat.objects()) {
    bool all = true;
    for (Obj x : objects) all = all && le(x, u);
    if (all) bounds.push_back(u);
  }
  for (Obj u : bounds) {
    bool least = true;
    for (Obj v : bounds) least = least && le(u, v);
    if (least) return u;
  }
  throw Unsupported(std::string(upper ? "join" : "meet") + " missing in " + cat.name());
}

Mor unique_arrow(const FiniteCategory& cat, Obj a, Obj b) {
  auto h = cat.hom(a, b);
  if (h.size() != 1) throw TheoremViolation("expected exactly one arrow " + cat.name_of(a) + " -> " + cat.name_of(b));
  return h.front();
}

}  // namespace

Obj join(const FiniteCategory& cat, const std::vector<Obj>& objects) { return bound(cat, objects, true); }
Obj meet(const FiniteCategory& cat, const std::vector<Obj>& objects) { return bound(cat, objects, false); }

bool is_lattice(const FiniteCategory& cat) {
  if (!is_thin(cat) || cat.object_count() == 0) return false;
  const auto& objs = cat.objects();
  try {
    for (Obj a : objs) {
      for (Obj b : objs) {
        join(cat, {a, b});
        meet(cat, {a, b});
      }
    }
  } catch (const Unsupported&) {
    return false;
  }
  return true;
}

ColimitComparison colimit_comparison(const FiniteCategory& cat, const Localization& loc,
                                     const std::vector<Obj>& diagram) {
  std::vector<Obj> localized;
  for (Obj x : diagram) localized.push_back(loc(x));
  ColimitComparison r;
  r.join_of_local = join(cat, localized);
  r.join = join(cat, diagram);
  r.alpha = unique_arrow(cat, r.join_of_local, loc(r.join));
  r.is_equivalence = loc.is_equivalence(r.alpha);
  r.local_of_join_of_local = loc(r.join_of_local);
  r.local_of_join = loc(r.join);
  return r;
}

LimitComparison limit_comparison(const FiniteCategory& cat, const Localization& loc, const std::vector<Obj>& diagram) {
  std::vector<Obj> localized;
  for (Obj x : diagram) localized.push_back(loc(x));
  LimitComparison r;
  r.meet = meet(cat, diagram);
  r.meet_of_local = meet(cat, localized);
  r.beta = unique_arrow(cat, loc(r.meet), r.meet_of_local);
  r.is_equivalence = loc.is_equivalence(r.beta);
  r.is_isomorphism = cat.is_isomorphism(r.beta);
  return r;
}

Localization product_localization(const ProductCategory& product, const Localization& left,
                                  const Localization& right) {
  const auto& cat = product.category;
  Functor functor{cat, cat, {}, {}, left.functor.name + "x" + right.functor.name};
  std::vector<Mor> units;
  ObjectSet locals(cat->object_count());
  for (Obj o : cat->objects()) {
    auto [a, b] = product.object_pairs[index(o)];
    functor.objects.push_back(product.object(left(a), right(b)));
    units.push_back(product.morphism(left.unit[a], right.unit[b]));
    if (left.is_local(a) && right.is_local(b)) locals.insert(o);
  }
  for (Mor m : cat->morphisms()) {
    auto [f, g] = product.morphism_pairs[index(m)];
    functor.morphisms.push_back(product.morphism(left(f), right(g)));
  }
  return Localization{cat, functor, NatTransform{Functor::identity(cat), functor, units, "l"}, locals, std::nullopt};
}

}  // namespace catloc
