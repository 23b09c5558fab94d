#include <algorithm>
#include <map>
#include <numeric>

#include "catloc/errors.hpp"
#include "catloc/fixtures.hpp"

namespace catloc::fixtures {

namespace {

Poset empty_order(int n) {
  Poset p;
  p.size = n;
  p.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) p.leq[i][i] = true;
  return p;
}

std::vector<bool> relabeled(const Poset& p, const std::vector<int>& perm) {
  std::vector<bool> code(static_cast<std::size_t>(p.size * p.size));
  for (int a = 0; a < p.size; ++a) {
    for (int b = 0; b < p.size; ++b) code[perm[a] * p.size + perm[b]] = p.leq[a][b];
  }
  return code;
}

std::vector<bool> canonical_code(const Poset& p) {
  std::vector<int> perm(p.size);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> best = relabeled(p, perm);
  while (std::next_permutation(perm.begin(), perm.end())) best = std::min(best, relabeled(p, perm));
  return best;
}

bool monotone(const Poset& p, const Poset& q, const std::vector<int>& f) {
  for (int a = 0; a < p.size; ++a) {
    for (int b = 0; b < p.size; ++b) {
      if (p.le(a, b) && !q.le(f[a], f[b])) return false;
    }
  }
  return true;
}

template <class Keep>
std::vector<Operator> operators(const Poset& p, Keep&& keep) {
  std::vector<Operator> out;
  Operator identity(p.size);
  std::iota(identity.begin(), identity.end(), 0);
  out.push_back(identity);
  Operator c(p.size, 0);
  while (true) {
    if (c != identity && monotone(p, p, c) && keep(c)) {
      bool idempotent = true;
      for (int x = 0; x < p.size; ++x) idempotent = idempotent && c[c[x]] == c[x];
      if (idempotent) out.push_back(c);
    }
    int k = p.size;
    while (k > 0 && ++c[k - 1] == p.size) c[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

std::vector<Obj> as_objects(const std::vector<int>& map) {
  std::vector<Obj> out;
  for (int v : map) out.push_back(Obj{static_cast<std::uint32_t>(v)});
  return out;
}

}  // namespace

Poset chain(int n) {
  Poset p = empty_order(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) p.leq[a][b] = true;
  }
  return p;
}

Poset antichain(int n) { return empty_order(n); }

void validate(const Poset& p) {
  for (int a = 0; a < p.size; ++a) {
    if (!p.le(a, a)) throw Error("order relation is not reflexive at " + std::to_string(a));
    for (int b = 0; b < p.size; ++b) {
      if (a != b && p.le(a, b) && p.le(b, a)) throw Error("order relation is not antisymmetric");
      for (int c = 0; c < p.size; ++c) {
        if (p.le(a, b) && p.le(b, c) && !p.le(a, c)) throw Error("order relation is not transitive");
      }
    }
  }
}

std::vector<Poset> all_posets(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  }
  std::vector<Poset> out;
  std::vector<std::vector<bool>> seen;
  for (std::size_t bits = 0; bits < (std::size_t{1} << pairs.size()); ++bits) {
    Poset p = empty_order(n);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (bits & (std::size_t{1} << k)) p.leq[pairs[k].first][pairs[k].second] = true;
    }
    bool transitive = true;
    for (int a = 0; a < n && transitive; ++a) {
      for (int b = 0; b < n && transitive; ++b) {
        for (int c = 0; c < n && transitive; ++c) transitive = !(p.le(a, b) && p.le(b, c)) || p.le(a, c);
      }
    }
    if (!transitive) continue;
    auto code = canonical_code(p);
    if (std::find(seen.begin(), seen.end(), code) != seen.end()) continue;
    seen.push_back(std::move(code));
    out.push_back(std::move(p));
  }
  return out;
}

CategoryPtr poset_category(const Poset& p, const std::string& name) {
  validate(p);
  CategoryBuilder builder(name.empty() ? "P" + std::to_string(p.size) : name);
  for (int a = 0; a < p.size; ++a) builder.add_object(std::to_string(a));
  std::vector<Mor> arrow(static_cast<std::size_t>(p.size * p.size), kNoMorphism);
  for (int a = 0; a < p.size; ++a) {
    for (int b = 0; b < p.size; ++b) {
      Obj src{static_cast<std::uint32_t>(a)};
      if (a == b) {
        arrow[a * p.size + b] = builder.identity(src);
      } else if (p.le(a, b)) {
        arrow[a * p.size + b] =
            builder.add_morphism(std::to_string(a) + "_" + std::to_string(b), src, Obj{static_cast<std::uint32_t>(b)});
      }
    }
  }
  return builder.build(
      [&](Mor g, Mor f) { return arrow[index(builder.source(f)) * p.size + index(builder.target(g))]; });
}

Poset poset_of(const FiniteCategory& cat) {
  if (!is_thin(cat)) throw Unsupported(cat.name() + " is not thin");
  Poset p = empty_order(static_cast<int>(cat.object_count()));
  for (Obj a : cat.objects()) {
    for (Obj b : cat.objects()) p.leq[index(a)][index(b)] = !cat.hom(a, b).empty();
  }
  return p;
}

std::vector<Operator> closure_operators(const Poset& p) {
  return operators(p, [&](const Operator& c) {
    for (int x = 0; x < p.size; ++x) {
      if (!p.le(x, c[x])) return false;
    }
    return true;
  });
}

std::vector<Operator> interior_operators(const Poset& p) {
  return operators(p, [&](const Operator& c) {
    for (int x = 0; x < p.size; ++x) {
      if (!p.le(c[x], x)) return false;
    }
    return true;
  });
}

Functor thin_functor(const CategoryPtr& source, const CategoryPtr& target, const std::vector<Obj>& objects,
                     const std::string& name) {
  Functor f{source, target, objects, {}, name.empty() ? "F" : name};
  for (Mor m : source->morphisms()) {
    auto h = target->hom(objects[index(source->source(m))], objects[index(source->target(m))]);
    if (h.empty()) throw ShapeMismatch("object map " + f.name + " is not monotone at " + source->name_of(m));
    f.morphisms.push_back(h.front());
  }
  return f;
}

std::optional<NatTransform> thin_transformation(const Functor& f, const Functor& g, const std::string& name) {
  NatTransform t{f, g, {}, name.empty() ? "t" : name};
  for (Obj x : f.source->objects()) {
    auto h = f.target->hom(f(x), g(x));
    if (h.empty()) return std::nullopt;
    t.components.push_back(h.front());
  }
  return t;
}

namespace {

NatTransform thin_or_throw(const Functor& f, const Functor& g, const std::string& name) {
  auto t = thin_transformation(f, g, name);
  if (!t) throw ShapeMismatch("no transformation " + f.name + " => " + g.name);
  return *t;
}

}  // namespace

Monad closure_monad(const CategoryPtr& poset, const Operator& c) {
  Functor t = thin_functor(poset, poset, as_objects(c), "T");
  Functor id = Functor::identity(poset);
  return Monad{t, thin_or_throw(id, t, "eta"), thin_or_throw(compose(t, t), t, "mu"), "closure"};
}

Localization closure_localization(const CategoryPtr& poset, const Operator& c) {
  Functor l = thin_functor(poset, poset, as_objects(c), "L");
  ObjectSet fixed(poset->object_count());
  for (std::size_t x = 0; x < c.size(); ++x) {
    if (c[x] == static_cast<int>(x)) fixed.insert(Obj{static_cast<std::uint32_t>(x)});
  }
  return Localization{poset, l, thin_or_throw(Functor::identity(poset), l, "l"), fixed, std::nullopt};
}

Colocalization interior_colocalization(const CategoryPtr& poset, const Operator& c) {
  Functor k = thin_functor(poset, poset, as_objects(c), "C");
  ObjectSet fixed(poset->object_count());
  for (std::size_t x = 0; x < c.size(); ++x) {
    if (c[x] == static_cast<int>(x)) fixed.insert(Obj{static_cast<std::uint32_t>(x)});
  }
  return Colocalization{poset, k, thin_or_throw(k, Functor::identity(poset), "c"), fixed, std::nullopt};
}

Adjunction galois_connection(const CategoryPtr& p, const CategoryPtr& q, const std::vector<Obj>& f) {
  Poset pp = poset_of(*p);
  Poset qq = poset_of(*q);
  std::vector<Obj> g;
  for (Obj y : q->objects()) {
    std::vector<int> below;
    for (int x = 0; x < pp.size; ++x)
      if (qq.le(static_cast<int>(index(f[x])), static_cast<int>(index(y)))) below.push_back(x);
    std::optional<int> best;
    for (int x : below) {
      if (std::all_of(below.begin(), below.end(), [&](int u) { return pp.le(u, x); })) best = x;
    }
    if (!best) throw Unsupported("monotone map has no right adjoint");
    g.push_back(Obj{static_cast<std::uint32_t>(*best)});
  }
  for (int x = 0; x < pp.size; ++x) {
    for (Obj y : q->objects()) {
      if (qq.le(static_cast<int>(index(f[x])), static_cast<int>(index(y))) != pp.le(x, static_cast<int>(index(g[index(y)])))) {
        throw Unsupported("monotone map has no right adjoint");
      }
    }
  }
  Functor left = thin_functor(p, q, f, "F");
  Functor right = thin_functor(q, p, g, "G");
  NatTransform unit = thin_or_throw(Functor::identity(p), compose(right, left), "eta");
  NatTransform counit = thin_or_throw(compose(left, right), Functor::identity(q), "eps");
  return Adjunction{left, right, unit, counit, "galois"};
}

std::vector<Adjunction> galois_connections(const CategoryPtr& p, const CategoryPtr& q) {
  Poset pp = poset_of(*p);
  Poset qq = poset_of(*q);
  std::vector<Adjunction> out;
  if (pp.size == 0) return out;
  std::vector<int> f(pp.size, 0);
  while (true) {
    if (qq.size > 0 && monotone(pp, qq, f)) {
      try {
        out.push_back(galois_connection(p, q, as_objects(f)));
      } catch (const Unsupported&) {
      }
    }
    int k = pp.size;
    while (k > 0 && ++f[k - 1] >= qq.size) f[--k] = 0;
    if (k == 0 || qq.size == 0) break;
  }
  return out;
}

LatticeStructure lattice_structure(const CategoryPtr& lattice) {
  if (!is_lattice(*lattice)) throw Unsupported(lattice->name() + " is not a lattice");
  LatticeStructure s{product_category(lattice, lattice), {}, {}, {}, {}, {}};
  const auto& sq = s.square.category;
  std::vector<Obj> joins, meets, diag;
  for (Obj o : sq->objects()) {
    auto [a, b] = s.square.object_pairs[index(o)];
    joins.push_back(join(*lattice, {a, b}));
    meets.push_back(meet(*lattice, {a, b}));
  }
  for (Obj a : lattice->objects()) diag.push_back(s.square.object(a, a));
  s.join = thin_functor(sq, lattice, joins, "join");
  s.meet = thin_functor(sq, lattice, meets, "meet");
  s.diagonal = thin_functor(lattice, sq, diag, "diag");
  s.join_diagonal = Adjunction{s.join, s.diagonal,
                               thin_or_throw(Functor::identity(sq), compose(s.diagonal, s.join), "eta"),
                               thin_or_throw(compose(s.join, s.diagonal), Functor::identity(lattice), "eps"),
                               "join-|diag"};
  s.diagonal_meet = Adjunction{s.diagonal, s.meet,
                               thin_or_throw(Functor::identity(lattice), compose(s.meet, s.diagonal), "eta"),
                               thin_or_throw(compose(s.diagonal, s.meet), Functor::identity(sq), "eps"),
                               "diag-|meet"};
  return s;
}

std::vector<Mor> enumerate_test_morphisms(const FiniteCategory& cat) {
  std::vector<Mor> out;
  for (Mor m : cat.morphisms()) {
    if (!cat.is_identity(m)) out.push_back(m);
  }
  return out;
}

}  // namespace catloc::fixtures
