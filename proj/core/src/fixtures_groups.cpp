#include <algorithm>
#include <deque>
#include <map>

#include "catloc/errors.hpp"
#include "catloc/fixtures.hpp"

namespace catloc::fixtures {

namespace {

using Perm = std::vector<int>;

Perm cycle(int degree, std::vector<int> points) {
  Perm p(degree);
  for (int i = 0; i < degree; ++i) p[i] = i;
  for (std::size_t i = 0; i < points.size(); ++i) p[points[i]] = points[(i + 1) % points.size()];
  return p;
}

Perm times(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = a[b[x]];
  return out;
}

GroupTable from_permutations(std::string name, int degree, const std::vector<Perm>& gens) {
  Perm id = cycle(degree, {});
  std::vector<Perm> elements{id};
  std::map<Perm, int> where{{id, 0}};
  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (const Perm& s : gens) {
      Perm next = times(elements[k], s);
      if (where.emplace(next, static_cast<int>(elements.size())).second) elements.push_back(next);
    }
  }
  GroupTable g;
  g.name = std::move(name);
  g.order = static_cast<int>(elements.size());
  g.mul.assign(g.order, std::vector<int>(g.order));
  for (int a = 0; a < g.order; ++a) {
    for (int b = 0; b < g.order; ++b) g.mul[a][b] = where.at(times(elements[a], elements[b]));
  }
  for (const Perm& s : gens) g.generators.push_back(where.at(s));
  g.abelian = true;
  for (int a = 0; a < g.order; ++a) {
    for (int b = 0; b < g.order; ++b) g.abelian = g.abelian && g.mul[a][b] == g.mul[b][a];
  }
  return g;
}

/// Left multiplication by i and j on the units 1, i, j, k, -1, -i, -j, -k.
std::vector<Perm> quaternion_generators() {
  // basis product: sign and index for e_a * e_b with 0=1, 1=i, 2=j, 3=k
  const int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  auto left = [&](int unit) {
    Perm p(8);
    for (int x = 0; x < 8; ++x) {
      int a = unit % 4, b = x % 4;
      int sign = sgn[a][b] * (unit >= 4 ? -1 : 1) * (x >= 4 ? -1 : 1);
      p[x] = idx[a][b] + (sign < 0 ? 4 : 0);
    }
    return p;
  };
  return {left(1), left(2)};
}

/// Element map of the homomorphism sending generator k to images[k], or
/// nothing when no homomorphism does.
std::optional<std::vector<int>> extend(const GroupTable& g, const GroupTable& h, const std::vector<int>& images) {
  std::vector<int> map(g.order, -1);
  map[0] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < g.generators.size(); ++k) {
      int y = g.mul[x][g.generators[k]];
      int value = h.mul[map[x]][images[k]];
      if (map[y] < 0) {
        map[y] = value;
        queue.push_back(y);
      } else if (map[y] != value) {
        return std::nullopt;
      }
    }
  }
  return map;
}

std::size_t tuple_code(const std::vector<int>& images, int base) {
  std::size_t code = 0;
  for (int v : images) code = code * static_cast<std::size_t>(base) + static_cast<std::size_t>(v);
  return code;
}

char digit36(int v) { return static_cast<char>(v < 10 ? '0' + v : 'a' + (v - 10)); }

}  // namespace

std::vector<GroupTable> group_tables(int max_order) {
  if (max_order > 8) throw Unsupported("the built-in group table stops at order 8");
  std::vector<GroupTable> all;
  all.push_back(from_permutations("1", 1, {}));
  all.push_back(from_permutations("Z2", 2, {cycle(2, {0, 1})}));
  all.push_back(from_permutations("Z3", 3, {cycle(3, {0, 1, 2})}));
  all.push_back(from_permutations("Z4", 4, {cycle(4, {0, 1, 2, 3})}));
  all.push_back(from_permutations("Z2xZ2", 4, {cycle(4, {0, 1}), cycle(4, {2, 3})}));
  all.push_back(from_permutations("Z5", 5, {cycle(5, {0, 1, 2, 3, 4})}));
  all.push_back(from_permutations("Z6", 6, {cycle(6, {0, 1, 2, 3, 4, 5})}));
  all.push_back(from_permutations("S3", 3, {cycle(3, {0, 1, 2}), cycle(3, {0, 1})}));
  all.push_back(from_permutations("Z7", 7, {cycle(7, {0, 1, 2, 3, 4, 5, 6})}));
  all.push_back(from_permutations("Z8", 8, {cycle(8, {0, 1, 2, 3, 4, 5, 6, 7})}));
  all.push_back(from_permutations("Z2xZ4", 6, {cycle(6, {0, 1}), cycle(6, {2, 3, 4, 5})}));
  all.push_back(from_permutations("Z2xZ2xZ2", 6, {cycle(6, {0, 1}), cycle(6, {2, 3}), cycle(6, {4, 5})}));
  all.push_back(from_permutations("D4", 4, {cycle(4, {0, 1, 2, 3}), cycle(4, {1, 3})}));
  all.push_back(from_permutations("Q8", 8, quaternion_generators()));
  std::vector<GroupTable> out;
  for (auto& g : all) {
    if (g.order <= max_order) out.push_back(std::move(g));
  }
  return out;
}

std::optional<Obj> GroupSkeleton::find(const std::string& name) const {
  std::string plain;
  for (char c : name) {
    if (c != '/') plain += c;
  }
  if (plain == "0") plain = "1";
  return category->find_object(plain);
}

Obj GroupSkeleton::object(const std::string& name) const {
  auto o = find(name);
  if (!o) throw UnknownId("no group " + name + " of order <= " + std::to_string(max_order));
  return *o;
}

ObjectSet GroupSkeleton::abelian_objects() const {
  ObjectSet out(groups.size());
  for (Obj o : category->objects()) {
    if (is_abelian(o)) out.insert(o);
  }
  return out;
}

GroupSkeleton group_skeleton(int max_order, const Budget& budget) {
  if (max_order < 1) throw Error("group skeleton needs max_order >= 1");
  GroupSkeleton sk;
  sk.max_order = max_order;
  sk.groups = group_tables(max_order);
  const std::size_t n = sk.groups.size();

  // homs[x * n + y]: element maps in generator-tuple order.
  std::vector<std::vector<std::pair<std::vector<int>, std::vector<int>>>> homs(n * n);
  std::size_t total = 0;
  for (std::size_t x = 0; x < n; ++x) {
    const auto& g = sk.groups[x];
    for (std::size_t y = 0; y < n; ++y) {
      const auto& h = sk.groups[y];
      std::vector<int> images(g.generators.size(), 0);
      while (true) {
        if (auto map = extend(g, h, images)) homs[x * n + y].emplace_back(images, *map);
        std::size_t k = images.size();
        while (k > 0 && ++images[k - 1] == h.order) images[--k] = 0;
        if (k == 0) break;
      }
      total += homs[x * n + y].size();
    }
  }
  budget.check(n, total, "finite groups of order <= " + std::to_string(max_order));

  CategoryBuilder builder("Grp" + std::to_string(max_order));
  for (const auto& g : sk.groups) builder.add_object(g.name);
  std::vector<std::vector<Mor>> lookup(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto& g = sk.groups[x];
    for (std::size_t y = 0; y < n; ++y) {
      const auto& h = sk.groups[y];
      std::size_t codes = 1;
      for (std::size_t k = 0; k < g.generators.size(); ++k) codes *= static_cast<std::size_t>(h.order);
      lookup[x * n + y].assign(codes, kNoMorphism);
      for (const auto& [images, map] : homs[x * n + y]) {
        bool is_identity = x == y;
        for (int e = 0; is_identity && e < g.order; ++e) is_identity = map[e] == e;
        Obj src{static_cast<std::uint32_t>(x)};
        Obj tgt{static_cast<std::uint32_t>(y)};
        Mor m;
        if (is_identity) {
          m = builder.identity(src);
        } else {
          std::string code;
          for (int v : images) code += digit36(v);
          if (code.empty()) code = "0";
          m = builder.add_morphism(g.name + "_" + h.name + "_" + code, src, tgt);
        }
        if (sk.maps.size() <= index(m)) sk.maps.resize(index(m) + 1);
        sk.maps[index(m)] = map;
        lookup[x * n + y][tuple_code(images, h.order)] = m;
      }
    }
  }
  sk.category = builder.build([&](Mor g2, Mor f) {
    std::size_t x = index(builder.source(f));
    std::size_t z = index(builder.target(g2));
    const auto& g = sk.groups[x];
    std::vector<int> images;
    for (int gen : g.generators) images.push_back(sk.maps[index(g2)][sk.maps[index(f)][gen]]);
    return lookup[x * n + z][tuple_code(images, sk.groups[z].order)];
  });
  return sk;
}

Monad abelianization_monad(const GroupSkeleton& sk) {
  const auto& cat = *sk.category;
  Functor t{sk.category, sk.category, {}, {}, "ab"};
  NatTransform eta{Functor::identity(sk.category), t, {}, "eta"};

  for (Obj o : cat.objects()) {
    const auto& g = sk.groups[index(o)];
    if (g.abelian) {
      t.objects.push_back(o);
      eta.components.push_back(cat.identity(o));
      continue;
    }
    // commutator subgroup
    std::vector<bool> in(g.order, false);
    std::vector<int> inverse(g.order);
    for (int a = 0; a < g.order; ++a) {
      for (int b = 0; b < g.order; ++b) {
        if (g.mul[a][b] == 0) inverse[a] = b;
      }
    }
    std::vector<int> members{0};
    in[0] = true;
    for (int a = 0; a < g.order; ++a) {
      for (int b = 0; b < g.order; ++b) {
        int c = g.mul[g.mul[a][b]][g.mul[inverse[a]][inverse[b]]];
        if (!in[c]) {
          in[c] = true;
          members.push_back(c);
        }
      }
    }
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (std::size_t l = 0; l <= k; ++l) {
        for (int c : {g.mul[members[k]][members[l]], g.mul[members[l]][members[k]]}) {
          if (!in[c]) {
            in[c] = true;
            members.push_back(c);
          }
        }
      }
    }
    const int quotient = g.order / static_cast<int>(members.size());
    std::optional<Mor> found;
    for (Obj h : cat.objects()) {
      if (!sk.is_abelian(h) || sk.groups[index(h)].order != quotient) continue;
      for (Mor m : cat.hom(o, h)) {
        const auto& map = sk.maps[index(m)];
        std::vector<bool> hit(quotient, false);
        bool kernel_ok = true;
        for (int e = 0; e < g.order; ++e) {
          hit[map[e]] = true;
          kernel_ok = kernel_ok && ((map[e] == 0) == in[e]);
        }
        if (kernel_ok && std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) {
          found = m;
          break;
        }
      }
      if (found) break;
    }
    if (!found) throw TheoremViolation("abelianization of " + g.name + " is outside the skeleton");
    t.objects.push_back(cat.target(*found));
    eta.components.push_back(*found);
  }
  for (Mor m : cat.morphisms()) {
    Obj x = cat.source(m);
    Obj y = cat.target(m);
    Mor along = cat.compose_unchecked(eta[y], m);
    std::optional<Mor> induced;
    for (Mor h : cat.hom(t(x), t(y))) {
      if (cat.compose_unchecked(h, eta[x]) != along) continue;
      if (induced) throw TheoremViolation("abelianization: induced map is not unique");
      induced = h;
    }
    if (!induced) throw TheoremViolation("abelianization: no induced map for " + cat.name_of(m));
    t.morphisms.push_back(*induced);
  }
  eta.target = t;
  Functor tt = compose(t, t);
  NatTransform mu{tt, t, {}, "mu"};
  for (Obj o : cat.objects()) mu.components.push_back(cat.identity(t(o)));
  return Monad{t, eta, mu, "ab"};
}

}  // namespace catloc::fixtures
