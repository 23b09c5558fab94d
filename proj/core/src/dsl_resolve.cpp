#include <algorithm>
#include <charconv>

#include "catloc/dsl.hpp"

namespace catloc::dsl {

namespace {

const char* kind_name(const Entity& e) {
  static const char* names[] = {"category", "functor", "natural transformation", "monad", "adjunction"};
  return names[e.index()];
}

template <class T>
const T& expect_kind(const Environment& env, const std::string& name, Position pos, const char* what) {
  const Entity& e = env.at(name, pos);
  if (auto p = std::get_if<T>(&e)) return *p;
  throw ResolveError(pos, "'" + name + "' is a " + kind_name(e) + ", expected a " + what);
}

int int_param(const FixtureDecl& d, const std::string& key) {
  for (const auto& a : d.params) {
    if (a.key != key) continue;
    int v = 0;
    const auto& s = a.value.text;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (a.value.kind != Term::Kind::name || ec != std::errc() || ptr != s.data() + s.size() || v < 0) {
      throw ResolveError(d.position, "parameter '" + key + "' of fixture " + d.kind + " must be a number");
    }
    return v;
  }
  throw ResolveError(d.position, "fixture " + d.kind + " needs parameter '" + key + "'");
}

const Term& term_param(const FixtureDecl& d, const std::string& key) {
  for (const auto& a : d.params) {
    if (a.key == key) return a.value;
  }
  throw ResolveError(d.position, "fixture " + d.kind + " needs parameter '" + key + "'");
}

class Resolver {
 public:
  Resolver(Environment& env, const Budget& budget) : env_(env), budget_(budget) {}

  void operator()(const CategoryDecl& d) {
    CategoryBuilder b(d.name);
    for (const auto& o : d.objects) {
      if (b.find_object(o)) throw ResolveError(d.position, "object '" + o + "' declared twice in " + d.name);
      b.add_object(o);
    }
    auto object = [&](const std::string& name, Position pos) {
      auto o = b.find_object(name);
      if (!o) throw ResolveError(pos, "unresolved object '" + name + "' in category " + d.name);
      return *o;
    };
    for (const auto& m : d.morphisms) {
      if (b.find_morphism(m.name)) throw ResolveError(m.position, "morphism '" + m.name + "' declared twice");
      b.add_morphism(m.name, object(m.source, m.position), object(m.target, m.position));
    }
    auto morphism = [&](const std::string& name, Position pos) {
      auto m = b.find_morphism(name);
      if (!m) throw ResolveError(pos, "unresolved morphism '" + name + "' in category " + d.name);
      return *m;
    };
    for (const auto& c : d.composites) {
      Mor g = morphism(c.g, c.position), f = morphism(c.f, c.position), h = morphism(c.h, c.position);
      if (b.target(f) != b.source(g)) {
        throw ResolveError(c.position, "composition type mismatch: " + c.g + "." + c.f + " is not composable");
      }
      if (b.source(h) != b.source(f) || b.target(h) != b.target(g)) {
        throw ResolveError(c.position, "composition type mismatch: " + c.h + " does not have the type of " + c.g +
                                           "." + c.f);
      }
      b.set_composite(g, f, h);
    }
    auto missing = b.missing_composites();
    if (!missing.empty()) {
      auto name_of = [&](Mor m) {
        for (const auto& md : d.morphisms) {
          if (b.find_morphism(md.name) == m) return md.name;
        }
        return std::string("?");
      };
      throw ResolveError(d.position, "missing composite (" + name_of(missing.front().first) + "," +
                                         name_of(missing.front().second) + ") in category " + d.name);
    }
    budget_.check(b.object_count(), b.morphism_count(), "category " + d.name);
    add(d.name, d.position, b.build());
  }

  void operator()(const FunctorDecl& d) {
    CategoryPtr src = env_.category(d.source, d.position);
    CategoryPtr tgt = env_.category(d.target, d.position);
    Functor f{src, tgt, std::vector<Obj>(src->object_count(), Obj{0xffffffffu}),
              std::vector<Mor>(src->morphism_count(), kNoMorphism), d.name};
    for (const auto& e : d.objects) {
      Obj x = resolve_object(*src, e.from, e.position);
      if (index(f.objects[index(x)]) != 0xffffffffu) throw ResolveError(e.position, "object '" + e.from + "' mapped twice");
      f.objects[index(x)] = resolve_object(*tgt, e.to, e.position);
    }
    for (Obj x : src->objects()) {
      if (index(f.objects[index(x)]) == 0xffffffffu) {
        throw ResolveError(d.position, "functor " + d.name + " leaves object '" + src->name_of(x) + "' unmapped");
      }
    }
    for (const auto& e : d.morphisms) {
      auto m = src->find_morphism(e.from);
      if (!m) throw ResolveError(e.position, "unresolved morphism '" + e.from + "' in category " + src->name());
      auto n = tgt->find_morphism(e.to);
      if (!n) throw ResolveError(e.position, "unresolved morphism '" + e.to + "' in category " + tgt->name());
      if (f.morphisms[index(*m)] != kNoMorphism) throw ResolveError(e.position, "morphism '" + e.from + "' mapped twice");
      f.morphisms[index(*m)] = *n;
    }
    for (Mor m : src->morphisms()) {
      if (f.morphisms[index(m)] != kNoMorphism) continue;
      if (!src->is_identity(m)) {
        throw ResolveError(d.position, "functor " + d.name + " leaves morphism '" + src->name_of(m) + "' unmapped");
      }
      f.morphisms[index(m)] = tgt->identity(f.objects[index(src->source(m))]);
    }
    add(d.name, d.position, std::move(f));
  }

  void operator()(const NatDecl& d) {
    Functor s = env_.functor_expr(d.source, d.position);
    Functor t = env_.functor_expr(d.target, d.position);
    if (!same_category(s.source, t.source) || !same_category(s.target, t.target)) {
      throw ResolveError(d.position, "transformation " + d.name + " joins functors of different types");
    }
    NatTransform n{s, t, std::vector<Mor>(s.source->object_count(), kNoMorphism), d.name};
    for (const auto& e : d.components) {
      Obj x = resolve_object(*s.source, e.from, e.position);
      auto m = s.target->find_morphism(e.to);
      if (!m) throw ResolveError(e.position, "unresolved morphism '" + e.to + "' in category " + s.target->name());
      if (n.components[index(x)] != kNoMorphism) throw ResolveError(e.position, "component at '" + e.from + "' given twice");
      n.components[index(x)] = *m;
    }
    for (Obj x : s.source->objects()) {
      if (n.components[index(x)] == kNoMorphism) {
        throw ResolveError(d.position, "transformation " + d.name + " has no component at '" + s.source->name_of(x) + "'");
      }
    }
    add(d.name, d.position, std::move(n));
  }

  void operator()(const MonadDecl& d) {
    const Functor& t = env_.functor(d.functor, d.position);
    const auto& unit = expect_kind<NatTransform>(env_, d.unit, d.position, "natural transformation");
    const auto& mult = expect_kind<NatTransform>(env_, d.mult, d.position, "natural transformation");
    if (!same_category(t.source, t.target)) throw ResolveError(d.position, "monad functor must be an endofunctor");
    if (!same_functor(unit.source, Functor::identity(t.source)) || !same_functor(unit.target, t)) {
      throw ResolveError(d.position, "unit of monad " + d.name + " must go Id => " + d.functor);
    }
    if (!same_functor(mult.source, compose(t, t)) || !same_functor(mult.target, t)) {
      throw ResolveError(d.position, "multiplication of monad " + d.name + " must go " + d.functor + "." + d.functor +
                                         " => " + d.functor);
    }
    add(d.name, d.position, Monad{t, unit, mult, d.name});
  }

  void operator()(const AdjunctionDecl& d) {
    const Functor& f = env_.functor(d.left, d.position);
    const Functor& g = env_.functor(d.right, d.position);
    const auto& unit = expect_kind<NatTransform>(env_, d.unit, d.position, "natural transformation");
    const auto& counit = expect_kind<NatTransform>(env_, d.counit, d.position, "natural transformation");
    if (!same_category(f.source, g.target) || !same_category(f.target, g.source)) {
      throw ResolveError(d.position, "adjoint functors of " + d.name + " do not go back and forth");
    }
    if (!same_functor(unit.source, Functor::identity(f.source)) || !same_functor(unit.target, compose(g, f))) {
      throw ResolveError(d.position, "unit of adjunction " + d.name + " must go Id => " + d.right + "." + d.left);
    }
    if (!same_functor(counit.source, compose(f, g)) || !same_functor(counit.target, Functor::identity(f.target))) {
      throw ResolveError(d.position, "counit of adjunction " + d.name + " must go " + d.left + "." + d.right + " => Id");
    }
    add(d.name, d.position, Adjunction{f, g, unit, counit, d.name});
  }

  void operator()(const FixtureDecl& d) {
    try {
      fixture(d);
    } catch (const UnknownId& e) {
      throw ResolveError(d.position, e.what());
    } catch (const Unsupported& e) {
      throw ResolveError(d.position, e.what());
    }
  }

 private:
  void fixture(const FixtureDecl& d) {
    if (d.kind == "abelian") {
      auto sk = std::make_shared<const fixtures::AbelianSkeleton>(fixtures::abelian_skeleton(int_param(d, "max_order"), budget_));
      env_.abelian[d.name] = sk;
      add(d.name, d.position, sk->category);
    } else if (d.kind == "groups") {
      auto sk = std::make_shared<const fixtures::GroupSkeleton>(fixtures::group_skeleton(int_param(d, "max_order"), budget_));
      env_.groups[d.name] = sk;
      add(d.name, d.position, sk->category);
    } else if (d.kind == "poset") {
      const std::string& shape = term_param(d, "shape").text;
      int n = int_param(d, "size");
      budget_.check(static_cast<std::size_t>(n), static_cast<std::size_t>(n) * static_cast<std::size_t>(n), "poset");
      if (shape != "chain" && shape != "antichain") {
        throw ResolveError(d.position, "poset shape must be chain or antichain, not '" + shape + "'");
      }
      add(d.name, d.position, fixtures::poset_category(shape == "chain" ? fixtures::chain(n) : fixtures::antichain(n), d.name));
    } else if (d.kind == "tensor") {
      const std::string& cat = term_param(d, "category").text;
      auto it = env_.abelian.find(cat);
      if (it == env_.abelian.end()) throw ResolveError(d.position, "'" + cat + "' is not an abelian fixture");
      auto m = fixtures::tensor_monad(*it->second, term_param(d, "ring").text);
      m.name = d.name;
      add(d.name, d.position, std::move(m));
    } else if (d.kind == "abelianization") {
      const std::string& cat = term_param(d, "category").text;
      auto it = env_.groups.find(cat);
      if (it == env_.groups.end()) throw ResolveError(d.position, "'" + cat + "' is not a groups fixture");
      auto m = fixtures::abelianization_monad(*it->second);
      m.name = d.name;
      add(d.name, d.position, std::move(m));
    } else if (d.kind == "closure") {
      CategoryPtr cat = env_.category(term_param(d, "category").text, d.position);
      const Term& map = term_param(d, "map");
      if (map.kind != Term::Kind::list || map.items.size() != cat->object_count()) {
        throw ResolveError(d.position, "closure map must list one image per object");
      }
      fixtures::Operator op;
      for (const auto& item : map.items) op.push_back(static_cast<int>(index(resolve_object(*cat, item, d.position))));
      auto ops = fixtures::closure_operators(fixtures::poset_of(*cat));
      if (std::find(ops.begin(), ops.end(), op) == ops.end()) {
        throw ResolveError(d.position, "map " + print(map) + " is not a closure operator");
      }
      auto m = fixtures::closure_monad(cat, op);
      m.name = d.name;
      add(d.name, d.position, std::move(m));
    } else {
      throw ResolveError(d.position, "unknown fixture '" + d.kind + "'");
    }
  }

  void add(const std::string& name, Position pos, Entity e) {
    if (env_.entities.count(name)) throw ResolveError(pos, "'" + name + "' declared twice");
    env_.entities.emplace(name, std::move(e));
    env_.order.push_back(name);
  }

  Environment& env_;
  const Budget& budget_;
};

}  // namespace

const Entity& Environment::at(const std::string& name, Position pos) const {
  auto it = entities.find(name);
  if (it == entities.end()) throw ResolveError(pos, "unresolved identifier '" + name + "'");
  return it->second;
}

CategoryPtr Environment::category(const std::string& name, Position pos) const {
  const Entity& e = at(name, pos);
  if (auto c = std::get_if<CategoryPtr>(&e)) return *c;
  if (auto m = std::get_if<Monad>(&e)) return m->category();
  throw ResolveError(pos, "'" + name + "' is a " + kind_name(e) + ", expected a category");
}

const Functor& Environment::functor(const std::string& name, Position pos) const {
  return expect_kind<Functor>(*this, name, pos, "functor");
}

Functor Environment::functor_expr(const std::string& text, Position pos) const {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto dot = text.find('.', start);
    parts.push_back(text.substr(start, dot - start));
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  auto one = [&](const std::string& name) {
    if (name.rfind("Id_", 0) == 0 && !entities.count(name)) return Functor::identity(category(name.substr(3), pos));
    return functor(name, pos);
  };
  Functor f = one(parts.back());
  for (std::size_t k = parts.size() - 1; k-- > 0;) {
    Functor g = one(parts[k]);
    if (!same_category(g.source, f.target)) throw ResolveError(pos, "functor expression " + text + " does not compose");
    f = compose(g, f);
  }
  return f;
}

const Monad& Environment::monad(const std::string& name, Position pos) const {
  return expect_kind<Monad>(*this, name, pos, "monad");
}

const Adjunction& Environment::adjunction(const std::string& name, Position pos) const {
  return expect_kind<Adjunction>(*this, name, pos, "adjunction");
}

Environment resolve(const Document& doc, const Budget& budget) {
  Environment env;
  Resolver r(env, budget);
  for (const auto& d : doc.declarations) std::visit(r, d);
  return env;
}

Obj resolve_object(const FiniteCategory& cat, const std::string& name, Position pos) {
  if (auto o = cat.find_object(name)) return *o;
  std::string stripped;
  std::copy_if(name.begin(), name.end(), std::back_inserter(stripped), [](char c) { return c != '/'; });
  if (auto o = cat.find_object(stripped)) return *o;
  throw ResolveError(pos, "unresolved object '" + name + "' in category " + cat.name());
}

Mor resolve_morphism(const FiniteCategory& cat, const Term& ref, Position pos) {
  if (ref.kind == Term::Kind::name) {
    if (auto m = cat.find_morphism(ref.text)) return *m;
    throw ResolveError(pos, "unresolved morphism '" + ref.text + "' in category " + cat.name());
  }
  if (ref.kind != Term::Kind::arrow) throw ResolveError(pos, "expected a morphism, found " + print(ref));
  Obj a = resolve_object(cat, ref.text, pos);
  Obj b = resolve_object(cat, ref.target, pos);
  auto hom = cat.hom(a, b);
  if (hom.empty()) throw ResolveError(pos, "no morphism " + print(ref));
  if (hom.size() == 1) return hom.front();
  std::vector<Mor> essential;
  auto zeros = zero_objects(cat);
  for (Mor m : hom) {
    bool through_zero = std::any_of(zeros.begin(), zeros.end(), [&](Obj z) {
      auto u = cat.hom(a, z), v = cat.hom(z, b);
      return !u.empty() && !v.empty() && cat.compose_unchecked(v.front(), u.front()) == m;
    });
    if (!through_zero) essential.push_back(m);
  }
  if (essential.size() != 1) {
    throw ResolveError(pos, "morphism " + print(ref) + " is ambiguous (" + std::to_string(hom.size()) +
                                " candidates); name it explicitly");
  }
  return essential.front();
}

CategoryDecl emit_category(const FiniteCategory& cat, const std::string& name) {
  CategoryDecl d;
  d.name = name;
  for (Obj o : cat.objects()) d.objects.push_back(cat.name_of(o));
  for (Mor m : cat.morphisms()) {
    if (cat.is_identity(m)) continue;
    d.morphisms.push_back({cat.name_of(m), cat.name_of(cat.source(m)), cat.name_of(cat.target(m)), {}});
  }
  for (Mor f : cat.morphisms()) {
    if (cat.is_identity(f)) continue;
    for (Obj c : cat.objects()) {
      for (Mor g : cat.hom(cat.target(f), c)) {
        if (cat.is_identity(g)) continue;
        d.composites.push_back({cat.name_of(g), cat.name_of(f), cat.name_of(cat.compose_unchecked(g, f)), {}});
      }
    }
  }
  return d;
}

FunctorDecl emit_functor(const Functor& f, const std::string& name, const std::string& source,
                         const std::string& target) {
  FunctorDecl d;
  d.name = name;
  d.source = source;
  d.target = target;
  for (Obj o : f.source->objects()) d.objects.push_back({f.source->name_of(o), f.target->name_of(f(o)), {}});
  for (Mor m : f.source->morphisms()) {
    if (f.source->is_identity(m) && f.target->is_identity(f(m))) continue;
    d.morphisms.push_back({f.source->name_of(m), f.target->name_of(f(m)), {}});
  }
  return d;
}

NatDecl emit_nat(const NatTransform& t, const std::string& name, const std::string& source,
                 const std::string& target) {
  NatDecl d;
  d.name = name;
  d.source = source;
  d.target = target;
  const auto& dom = *t.source.source;
  for (Obj o : dom.objects()) d.components.push_back({dom.name_of(o), t.target.target->name_of(t[o]), {}});
  return d;
}

Document emit_fixtures(const Document& doc, const Budget& budget) {
  Environment env = resolve(doc, budget);
  Document out;
  for (const auto& decl : doc.declarations) {
    const auto* fx = std::get_if<FixtureDecl>(&decl);
    if (!fx) {
      out.declarations.push_back(decl);
      continue;
    }
    const Entity& e = env.at(fx->name, fx->position);
    if (auto c = std::get_if<CategoryPtr>(&e)) {
      out.declarations.emplace_back(emit_category(**c, fx->name));
    } else if (auto m = std::get_if<Monad>(&e)) {
      std::string cat;
      for (const auto& a : fx->params) {
        if (a.key == "category") cat = a.value.text;
      }
      std::string t = fx->name + "_T";
      out.declarations.emplace_back(emit_functor(m->functor, t, cat, cat));
      out.declarations.emplace_back(emit_nat(m->unit, fx->name + "_eta", "Id_" + cat, t));
      out.declarations.emplace_back(emit_nat(m->mult, fx->name + "_mu", t + "." + t, t));
      out.declarations.emplace_back(MonadDecl{fx->name, t, fx->name + "_eta", fx->name + "_mu", {}});
    }
  }
  out.tasks = doc.tasks;
  return out;
}

}  // namespace catloc::dsl
