#include "catloc/monad.hpp"

#include "catloc/errors.hpp"

namespace catloc {

Monad Monad::identity(const CategoryPtr& cat) {
  Functor id = Functor::identity(cat);
  return Monad{id, NatTransform::identity(id), NatTransform::identity(id), "Id"};
}

LawReport check_monad(const Monad& m) {
  LawReport report;
  report.append(check_functor(m.functor), "functor");
  if (!report.ok()) return report;
  if (!same_category(m.functor.source, m.functor.target)) {
    report.add("endofunctor", m.name);
    return report;
  }
  Functor tt = compose(m.functor, m.functor);
  if (!same_functor(m.unit.source, Functor::identity(m.category())) || !same_functor(m.unit.target, m.functor)) {
    report.add("unit shape", "eta must be Id => T");
  }
  if (!same_functor(m.mult.source, tt) || !same_functor(m.mult.target, m.functor)) {
    report.add("multiplication shape", "mu must be TT => T");
  }
  if (!report.ok()) return report;
  report.append(check_nat(m.unit), "unit");
  report.append(check_nat(m.mult), "multiplication");
  if (!report.ok()) return report;

  const auto& cat = *m.category();
  for (Obj x : cat.objects()) {
    Obj tx = m(x);
    Mor mu = m.mult[x];
    // mu o T(mu) = mu o mu_T
    if (cat.compose_unchecked(mu, m(m.mult[x])) != cat.compose_unchecked(mu, m.mult[tx])) {
      report.add("associativity mu o T mu = mu o mu T", cat.name_of(x));
    }
    if (cat.compose_unchecked(mu, m(m.unit[x])) != cat.identity(tx)) {
      report.add("unit law mu o T eta = id", cat.name_of(x));
    }
    if (cat.compose_unchecked(mu, m.unit[tx]) != cat.identity(tx)) {
      report.add("unit law mu o eta T = id", cat.name_of(x));
    }
  }
  return report;
}

Monad monad_of(const Adjunction& adj) {
  Functor gf = compose(adj.right, adj.left);
  NatTransform mult = whisker(adj.right, whisker(adj.counit, adj.left));
  mult.source = compose(gf, gf);
  mult.target = gf;
  mult.name = "G eps F";
  NatTransform unit = adj.unit;
  unit.target = gf;
  return Monad{gf, unit, mult, "monad(" + adj.name + ")"};
}

bool is_idempotent(const Monad& m) { return is_natural_isomorphism(m.mult); }

std::optional<NatTransform> find_monad_iso(const Monad& a, const Monad& b) {
  if (!same_category(a.category(), b.category())) return std::nullopt;
  const auto& cat = *a.category();
  return find_natural_transformation(
      a.functor, b.functor,
      [&](Obj x) {
        std::vector<Mor> out;
        for (Mor c : cat.hom(a(x), b(x))) {
          if (cat.is_isomorphism(c) && cat.compose_unchecked(c, a.unit[x]) == b.unit[x]) out.push_back(c);
        }
        return out;
      },
      [&](const NatTransform& theta) {
        // theta o mu_a = mu_b o (theta * theta), where (theta*theta)_X = theta_{T'X} o T(theta_X)
        for (Obj x : cat.objects()) {
          Mor both = cat.compose_unchecked(theta[b(x)], a(theta[x]));
          if (cat.compose_unchecked(theta[x], a.mult[x]) != cat.compose_unchecked(b.mult[x], both)) return false;
        }
        return true;
      });
}

bool is_algebra(const Monad& m, Obj carrier, Mor structure) {
  const auto& cat = *m.category();
  if (cat.source(structure) != m(carrier) || cat.target(structure) != carrier) return false;
  if (cat.compose_unchecked(structure, m.unit[carrier]) != cat.identity(carrier)) return false;
  return cat.compose_unchecked(structure, m(structure)) == cat.compose_unchecked(structure, m.mult[carrier]);
}

namespace {

std::uint64_t lift_key(Obj from, Obj to, Mor phi) {
  return (std::uint64_t{index(from)} << 48) | (std::uint64_t{index(to)} << 32) | index(phi);
}

}  // namespace

std::optional<Obj> EMCategory::find_algebra(Obj carrier, Mor structure) const {
  for (std::size_t i = 0; i < algebras.size(); ++i) {
    if (algebras[i].carrier == carrier && algebras[i].structure == structure) return Obj{static_cast<std::uint32_t>(i)};
  }
  return std::nullopt;
}

std::optional<Mor> EMCategory::lift(Obj from, Obj to, Mor phi) const {
  auto it = lookup_.find(lift_key(from, to, phi));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

EMCategory eilenberg_moore(const Monad& m, const Budget& budget) {
  const auto& base = m.category();
  const auto& cat = *base;
  EMCategory em;
  em.monad = m;
  for (Obj x : cat.objects()) {
    for (Mor a : cat.hom(m(x), x)) {
      if (is_algebra(m, x, a)) em.algebras.push_back({x, a});
    }
  }
  if (em.algebras.size() > budget.max_objects) {
    throw BudgetExceeded("Eilenberg-Moore category: " + std::to_string(em.algebras.size()) +
                         " algebras exceeds the object limit of " + std::to_string(budget.max_objects));
  }
  std::vector<std::size_t> structures_on(cat.object_count(), 0);
  for (const auto& alg : em.algebras) ++structures_on[index(alg.carrier)];
  auto unique_carrier = [&](const Algebra& alg) { return structures_on[index(alg.carrier)] == 1; };

  CategoryBuilder builder(cat.name() + "^" + m.name);
  for (const auto& alg : em.algebras) {
    builder.add_object(unique_carrier(alg) ? cat.name_of(alg.carrier)
                                           : "(" + cat.name_of(alg.carrier) + "," + cat.name_of(alg.structure) + ")");
    em.underlying.push_back(cat.identity(alg.carrier));
  }
  for (std::size_t i = 0; i < em.algebras.size(); ++i) {
    Obj oi{static_cast<std::uint32_t>(i)};
    em.lookup_.emplace(lift_key(oi, oi, cat.identity(em.algebras[i].carrier)), builder.identity(oi));
  }
  for (std::size_t i = 0; i < em.algebras.size(); ++i) {
    const auto& from = em.algebras[i];
    for (std::size_t j = 0; j < em.algebras.size(); ++j) {
      const auto& to = em.algebras[j];
      for (Mor phi : cat.hom(from.carrier, to.carrier)) {
        if (i == j && cat.is_identity(phi)) continue;
        if (cat.compose_unchecked(phi, from.structure) != cat.compose_unchecked(to.structure, m(phi))) continue;
        std::string name = cat.name_of(phi);
        if (!unique_carrier(from) || !unique_carrier(to)) name += "@" + std::to_string(i) + "," + std::to_string(j);
        Obj oi{static_cast<std::uint32_t>(i)};
        Obj oj{static_cast<std::uint32_t>(j)};
        Mor local = builder.add_morphism(name, oi, oj);
        em.underlying.push_back(phi);
        em.lookup_.emplace(lift_key(oi, oj, phi), local);
      }
    }
  }
  budget.check(builder.object_count(), builder.morphism_count(), "Eilenberg-Moore category");
  em.category = builder.build([&](Mor g, Mor f) -> Mor {
    Mor h = cat.compose_unchecked(em.underlying[index(g)], em.underlying[index(f)]);
    auto found = em.lift(builder.source(f), builder.target(g), h);
    return found.value_or(kNoMorphism);
  });

  const auto& emc = em.category;
  em.forgetful = Functor{emc, base, {}, em.underlying, "U"};
  for (const auto& alg : em.algebras) em.forgetful.objects.push_back(alg.carrier);

  em.free = Functor{base, emc, {}, {}, "F"};
  for (Obj x : cat.objects()) {
    auto fx = em.find_algebra(m(x), m.mult[x]);
    if (!fx) throw TheoremViolation("free algebra (T" + cat.name_of(x) + ", mu) is not an algebra");
    em.free.objects.push_back(*fx);
  }
  for (Mor phi : cat.morphisms()) {
    auto lifted = em.lift(em.free(cat.source(phi)), em.free(cat.target(phi)), m(phi));
    if (!lifted) throw TheoremViolation("T(" + cat.name_of(phi) + ") is not an algebra morphism");
    em.free.morphisms.push_back(*lifted);
  }

  Functor uf = compose(em.forgetful, em.free);
  Functor fu = compose(em.free, em.forgetful);
  NatTransform unit{Functor::identity(base), uf, m.unit.components, "eta"};
  NatTransform counit{fu, Functor::identity(emc), {}, "eps"};
  for (std::size_t i = 0; i < em.algebras.size(); ++i) {
    Obj oi{static_cast<std::uint32_t>(i)};
    const auto& alg = em.algebras[i];
    auto c = em.lift(em.free(alg.carrier), oi, alg.structure);
    if (!c) throw TheoremViolation("structure map of an algebra is not an algebra morphism");
    counit.components.push_back(*c);
  }
  em.adjunction = Adjunction{em.free, em.forgetful, unit, counit, "F-|U"};
  return em;
}

}  // namespace catloc
