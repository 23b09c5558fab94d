#include <algorithm>
#include <numeric>

#include "catloc/errors.hpp"
#include "catloc/fixtures.hpp"

namespace catloc::fixtures {

namespace {

void collect_factor_lists(int max_order, int product, Factors& current, std::vector<Factors>& out) {
  out.push_back(current);
  int start = current.empty() ? 2 : current.back();
  for (int d = start; product * d <= max_order; d += (current.empty() ? 1 : current.back())) {
    current.push_back(d);
    collect_factor_lists(max_order, product * d, current, out);
    current.pop_back();
  }
}

int product_of(const Factors& f) { return std::accumulate(f.begin(), f.end(), 1, std::multiplies<>()); }

char digit36(int v) { return static_cast<char>(v < 10 ? '0' + v : 'a' + (v - 10)); }

struct HomShape {
  // step[j][i]: coordinate i of the image of generator j runs over multiples of step.
  std::vector<std::vector<int>> step;
  std::vector<std::vector<int>> count;
  std::size_t size = 1;
};

HomShape hom_shape(const Factors& a, const Factors& b) {
  HomShape s;
  s.step.assign(a.size(), std::vector<int>(b.size()));
  s.count.assign(a.size(), std::vector<int>(b.size()));
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      int g = std::gcd(a[j], b[i]);
      s.count[j][i] = g;
      s.step[j][i] = b[i] / g;
      s.size *= static_cast<std::size_t>(g);
    }
  }
  return s;
}

/// Images for the given ordinal; the last coordinate varies fastest.
std::vector<std::vector<int>> decode(const HomShape& s, std::size_t ordinal) {
  std::vector<std::vector<int>> images(s.step.size());
  for (std::size_t j = s.step.size(); j-- > 0;) {
    images[j].assign(s.step[j].size(), 0);
    for (std::size_t i = s.step[j].size(); i-- > 0;) {
      auto c = static_cast<std::size_t>(s.count[j][i]);
      images[j][i] = static_cast<int>(ordinal % c) * s.step[j][i];
      ordinal /= c;
    }
  }
  return images;
}

std::size_t encode(const HomShape& s, const std::vector<std::vector<int>>& images) {
  std::size_t ordinal = 0;
  for (std::size_t j = 0; j < s.step.size(); ++j) {
    for (std::size_t i = 0; i < s.step[j].size(); ++i) {
      ordinal = ordinal * static_cast<std::size_t>(s.count[j][i]) + static_cast<std::size_t>(images[j][i] / s.step[j][i]);
    }
  }
  return ordinal;
}

std::string morphism_name(const std::string& src, const std::string& tgt, const std::vector<std::vector<int>>& images) {
  std::string code;
  for (std::size_t j = 0; j < images.size(); ++j) {
    if (j) code += '_';
    if (images[j].empty()) code += '0';
    for (int v : images[j]) code += digit36(v);
  }
  if (code.empty()) code = "0";
  return src + "_" + tgt + "_" + code;
}

int parse_ring(const std::string& ring) {
  std::string digits = ring;
  if (digits.rfind("Z/", 0) == 0) {
    digits = digits.substr(2);
  } else if (digits.rfind('Z', 0) == 0) {
    digits = digits.substr(1);
  } else {
    throw UnknownId("unknown ring " + ring);
  }
  if (digits.empty()) throw UnknownId("the ring Z is not a finite group in the skeleton");
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw Unsupported("only cyclic rings Z/k are supported, got " + ring);
  }
  return std::stoi(digits);
}

}  // namespace

std::string abelian_name(const Factors& factors) {
  if (factors.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += 'x';
    out += "Z" + std::to_string(factors[i]);
  }
  return out;
}

std::optional<Obj> AbelianSkeleton::find(const Factors& factors) const {
  auto it = std::find(groups.begin(), groups.end(), factors);
  if (it == groups.end()) return std::nullopt;
  return Obj{static_cast<std::uint32_t>(it - groups.begin())};
}

std::optional<Obj> AbelianSkeleton::find(const std::string& name) const {
  std::string plain;
  for (char c : name) {
    if (c != '/') plain += c;
  }
  if (plain == "1") plain = "0";
  return category->find_object(plain);
}

Obj AbelianSkeleton::object(const std::string& name) const {
  auto o = find(name);
  if (!o) throw UnknownId("no abelian group " + name + " of order <= " + std::to_string(max_order));
  return *o;
}

int AbelianSkeleton::order(Obj o) const { return product_of(groups[index(o)]); }

Mor AbelianSkeleton::morphism(Obj source, Obj target, const std::vector<std::vector<int>>& images) const {
  const Factors& a = groups[index(source)];
  const Factors& b = groups[index(target)];
  HomShape s = hom_shape(a, b);
  if (images.size() != a.size()) throw ShapeMismatch("generator image count does not match the source");
  std::vector<std::vector<int>> normal = images;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (normal[j].size() != b.size()) throw ShapeMismatch("image coordinates do not match the target");
    for (std::size_t i = 0; i < b.size(); ++i) {
      int v = ((normal[j][i] % b[i]) + b[i]) % b[i];
      if (v % s.step[j][i] != 0) throw ShapeMismatch("images do not define a homomorphism");
      normal[j][i] = v;
    }
  }
  return by_ordinal_[index(source) * groups.size() + index(target)][encode(s, normal)];
}

AbelianSkeleton abelian_skeleton(int max_order, const Budget& budget) {
  if (max_order < 1) throw Error("abelian skeleton needs max_order >= 1");
  AbelianSkeleton sk;
  sk.max_order = max_order;
  Factors current;
  collect_factor_lists(max_order, 1, current, sk.groups);
  std::stable_sort(sk.groups.begin(), sk.groups.end(), [](const Factors& x, const Factors& y) {
    int ox = product_of(x), oy = product_of(y);
    if (ox != oy) return ox < oy;
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  const std::size_t n = sk.groups.size();
  std::size_t total = 0;
  std::vector<HomShape> shapes;
  shapes.reserve(n * n);
  for (const auto& a : sk.groups) {
    for (const auto& b : sk.groups) {
      shapes.push_back(hom_shape(a, b));
      total += shapes.back().size;
    }
  }
  budget.check(n, total, "abelian skeleton of order <= " + std::to_string(max_order));
  for (const auto& g : sk.groups) {
    if (!g.empty() && g.back() > 36) throw Unsupported("cyclic factors above 36 are not encodable");
  }

  CategoryBuilder builder("Ab" + std::to_string(max_order));
  for (const auto& g : sk.groups) builder.add_object(abelian_name(g));
  sk.images.resize(n);
  sk.by_ordinal_.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const HomShape& s = shapes[x * n + y];
      auto& table = sk.by_ordinal_[x * n + y];
      table.resize(s.size);
      for (std::size_t ord = 0; ord < s.size; ++ord) {
        auto images = decode(s, ord);
        bool is_identity = x == y;
        for (std::size_t j = 0; is_identity && j < images.size(); ++j) {
          for (std::size_t i = 0; i < images[j].size(); ++i) {
            if (images[j][i] != (i == j ? 1 : 0)) is_identity = false;
          }
        }
        Obj src{static_cast<std::uint32_t>(x)};
        Obj tgt{static_cast<std::uint32_t>(y)};
        Mor m = is_identity ? builder.identity(src)
                            : builder.add_morphism(morphism_name(abelian_name(sk.groups[x]), abelian_name(sk.groups[y]), images),
                                                   src, tgt);
        if (sk.images.size() <= index(m)) sk.images.resize(index(m) + 1);
        sk.images[index(m)] = std::move(images);
        table[ord] = m;
      }
    }
  }
  sk.category = builder.build([&](Mor g, Mor f) {
    Obj a = builder.source(f);
    Obj b = builder.target(f);
    Obj c = builder.target(g);
    const Factors& cf = sk.groups[index(c)];
    const auto& x = sk.images[index(f)];
    const auto& y = sk.images[index(g)];
    std::vector<std::vector<int>> out(x.size(), std::vector<int>(cf.size(), 0));
    for (std::size_t j = 0; j < x.size(); ++j) {
      for (std::size_t k = 0; k < cf.size(); ++k) {
        long v = 0;
        for (std::size_t i = 0; i < x[j].size(); ++i) v += static_cast<long>(x[j][i]) * y[i][k];
        out[j][k] = static_cast<int>(v % cf[k]);
      }
    }
    const HomShape& s = shapes[index(a) * n + index(c)];
    (void)b;
    return sk.by_ordinal_[index(a) * n + index(c)][encode(s, out)];
  });
  return sk;
}

Monad tensor_monad(const AbelianSkeleton& sk, const std::string& ring) {
  int k = parse_ring(ring);
  if (k < 1 || !sk.find(k == 1 ? Factors{} : Factors{k})) {
    throw UnknownId("ring Z/" + std::to_string(k) + " is not in the skeleton of order <= " + std::to_string(sk.max_order));
  }
  const auto& cat = *sk.category;
  auto tensor = [&](const Factors& a) {
    Factors out;
    for (int d : a) {
      int g = std::gcd(k, d);
      if (g > 1) out.push_back(g);
    }
    return out;
  };
  auto kept = [&](const Factors& a) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (std::gcd(k, a[i]) > 1) out.push_back(i);
    }
    return out;
  };

  std::string name = "Z/" + std::to_string(k) + "(x)-";
  Functor t{sk.category, sk.category, {}, {}, "T"};
  for (Obj o : cat.objects()) t.objects.push_back(*sk.find(tensor(sk.factors(o))));
  for (Mor m : cat.morphisms()) {
    const Factors& a = sk.factors(cat.source(m));
    const Factors& b = sk.factors(cat.target(m));
    auto ka = kept(a);
    auto kb = kept(b);
    std::vector<std::vector<int>> images;
    for (std::size_t j : ka) {
      std::vector<int> row;
      for (std::size_t i : kb) row.push_back(sk.images[index(m)][j][i] % std::gcd(k, b[i]));
      images.push_back(std::move(row));
    }
    t.morphisms.push_back(sk.morphism(t(cat.source(m)), t(cat.target(m)), images));
  }

  NatTransform eta{Functor::identity(sk.category), t, {}, "eta"};
  for (Obj o : cat.objects()) {
    const Factors& a = sk.factors(o);
    auto ka = kept(a);
    std::vector<std::vector<int>> images(a.size(), std::vector<int>(ka.size(), 0));
    for (std::size_t pos = 0; pos < ka.size(); ++pos) images[ka[pos]][pos] = 1;
    eta.components.push_back(sk.morphism(o, t(o), images));
  }
  Functor tt = compose(t, t);
  NatTransform mu{tt, t, {}, "mu"};
  for (Obj o : cat.objects()) {
    if (tt(o) != t(o)) throw TheoremViolation("tensoring twice with Z/" + std::to_string(k) + " changed the group");
    mu.components.push_back(cat.identity(t(o)));
  }
  return Monad{t, eta, mu, name};
}

}  // namespace catloc::fixtures
