#include "oracles/oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace oracle {

Group cyclic_product(const std::vector<int>& orders) {
  Group g;
  g.order = 1;
  for (int n : orders) g.order *= n;
  auto digits = [&](int x) {
    std::vector<int> d(orders.size());
    for (std::size_t k = orders.size(); k-- > 0;) {
      d[k] = x % orders[k];
      x /= orders[k];
    }
    return d;
  };
  g.op.assign(g.order, std::vector<int>(g.order));
  for (int x = 0; x < g.order; ++x) {
    for (int y = 0; y < g.order; ++y) {
      auto a = digits(x), b = digits(y);
      int z = 0;
      for (std::size_t k = 0; k < orders.size(); ++k) z = z * orders[k] + (a[k] + b[k]) % orders[k];
      g.op[x][y] = z;
    }
  }
  return g;
}

namespace {

// Closes a set of permutations under composition; the identity comes first.
Group permutation_group(const std::vector<std::vector<int>>& gens) {
  std::size_t n = gens.front().size();
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> elems = {id};
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (const auto& s : gens) {
      std::vector<int> p(n);
      for (std::size_t i = 0; i < n; ++i) p[i] = s[elems[k][i]];
      if (std::find(elems.begin(), elems.end(), p) == elems.end()) elems.push_back(p);
    }
  }
  Group g;
  g.order = static_cast<int>(elems.size());
  g.op.assign(g.order, std::vector<int>(g.order));
  for (int a = 0; a < g.order; ++a) {
    for (int b = 0; b < g.order; ++b) {
      std::vector<int> p(n);
      for (std::size_t i = 0; i < n; ++i) p[i] = elems[a][elems[b][i]];
      g.op[a][b] = static_cast<int>(std::find(elems.begin(), elems.end(), p) - elems.begin());
    }
  }
  return g;
}

}  // namespace

Group symmetric3() { return permutation_group({{1, 0, 2}, {1, 2, 0}}); }

Group dihedral4() { return permutation_group({{1, 2, 3, 0}, {0, 3, 2, 1}}); }

Group quaternion8() {
  // Units +-1, +-i, +-j, +-k as (sign, basis) with basis 0..3 = 1, i, j, k.
  static const int table[4][4][2] = {
      {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
      {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
      {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
      {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
  };
  auto encode = [](int sign, int basis) { return basis * 2 + (sign < 0 ? 1 : 0); };
  Group g;
  g.order = 8;
  g.op.assign(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      int sa = a % 2 ? -1 : 1, sb = b % 2 ? -1 : 1;
      const auto& e = table[a / 2][b / 2];
      g.op[a][b] = encode(sa * sb * e[0], e[1]);
    }
  }
  return g;
}

std::vector<std::vector<int>> homomorphisms(const Group& a, const Group& b) {
  std::vector<std::vector<int>> out;
  std::vector<int> f(a.order, -1);
  f[0] = 0;
  std::function<void(int)> go = [&](int x) {
    if (x == a.order) {
      for (int u = 0; u < a.order; ++u) {
        for (int v = 0; v < a.order; ++v) {
          if (f[a.op[u][v]] != b.op[f[u]][f[v]]) return;
        }
      }
      out.push_back(f);
      return;
    }
    for (int y = 0; y < b.order; ++y) {
      f[x] = y;
      bool ok = true;
      for (int u = 0; u <= x && ok; ++u) {
        int p = a.op[u][x], q = a.op[x][u];
        if (p <= x) ok = f[p] == b.op[f[u]][y];
        if (ok && q <= x) ok = f[q] == b.op[y][f[u]];
      }
      if (ok) go(x + 1);
    }
    f[x] = -1;
  };
  go(1);
  return out;
}

std::size_t hom_count(const Group& a, const Group& b) { return homomorphisms(a, b).size(); }

Group hom_group(const Group& a, const Group& b) {
  auto homs = homomorphisms(a, b);
  std::sort(homs.begin(), homs.end());  // the zero map sorts first
  Group g;
  g.order = static_cast<int>(homs.size());
  g.op.assign(g.order, std::vector<int>(g.order));
  for (int x = 0; x < g.order; ++x) {
    for (int y = 0; y < g.order; ++y) {
      std::vector<int> s(a.order);
      for (int k = 0; k < a.order; ++k) s[k] = b.op[homs[x][k]][homs[y][k]];
      g.op[x][y] = static_cast<int>(std::lower_bound(homs.begin(), homs.end(), s) - homs.begin());
    }
  }
  return g;
}

Group dual(const Group& b, int e) { return hom_group(b, cyclic_product({e})); }

Group tensor_dual(const Group& a, const Group& b) {
  int e = std::gcd(a.order, b.order);
  if (e == 1) return cyclic_product({});
  return hom_group(a, dual(b, e));
}

std::size_t tensor_order(const Group& a, const Group& b) {
  int e = std::gcd(a.order, b.order);
  if (e == 1) return 1;
  return hom_count(a, dual(b, e));
}

std::vector<int> torsion_profile(const Group& g, int limit) {
  std::vector<int> out;
  for (int n = 1; n <= limit; ++n) {
    int count = 0;
    for (int x = 0; x < g.order; ++x) {
      int y = 0;
      for (int k = 0; k < n; ++k) y = g.op[y][x];
      count += y == 0;
    }
    out.push_back(count);
  }
  return out;
}

Abelianized abelianize(const Group& g) {
  auto inv = [&](int x) {
    for (int y = 0; y < g.order; ++y) {
      if (g.op[x][y] == 0) return y;
    }
    return -1;
  };
  std::set<int> sub = {0};
  for (int x = 0; x < g.order; ++x) {
    for (int y = 0; y < g.order; ++y) sub.insert(g.op[g.op[x][y]][g.op[inv(x)][inv(y)]]);
  }
  for (bool grew = true; grew;) {
    grew = false;
    for (int x : std::vector<int>(sub.begin(), sub.end())) {
      for (int y : std::vector<int>(sub.begin(), sub.end())) grew |= sub.insert(g.op[x][y]).second;
    }
  }
  // Cosets x[G,G], numbered by first appearance.
  std::vector<int> coset(g.order, -1);
  std::vector<int> reps;
  for (int x = 0; x < g.order; ++x) {
    if (coset[x] >= 0) continue;
    for (int s : sub) coset[g.op[x][s]] = static_cast<int>(reps.size());
    reps.push_back(x);
  }
  Group q;
  q.order = static_cast<int>(reps.size());
  q.op.assign(q.order, std::vector<int>(q.order));
  for (int a = 0; a < q.order; ++a) {
    for (int b = 0; b < q.order; ++b) q.op[a][b] = coset[g.op[reps[a]][reps[b]]];
  }
  return {q.order, torsion_profile(q)};
}

std::vector<bool> poset_locals(const Relation& le, int a, int b) {
  std::vector<bool> out(le.size());
  for (std::size_t x = 0; x < le.size(); ++x) out[x] = !le[a][x] || le[b][x];
  return out;
}

std::optional<int> poset_reflection(const Relation& le, const std::vector<bool>& locals, int x) {
  int n = static_cast<int>(le.size());
  for (int y = 0; y < n; ++y) {
    if (!locals[y] || !le[x][y]) continue;
    bool least = true;
    for (int z = 0; z < n; ++z) least = least && (!locals[z] || !le[x][z] || le[y][z]);
    if (least) return y;
  }
  return std::nullopt;
}

std::vector<bool> poset_cellular(const Relation& le, int a) {
  int n = static_cast<int>(le.size());
  std::vector<bool> out(n, true);
  for (int y = 0; y < n; ++y) {
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (!le[u][v] || le[a][u] != le[a][v]) continue;
        if (le[y][u] != le[y][v]) out[y] = false;
      }
    }
  }
  return out;
}

std::optional<int> poset_coreflection(const Relation& le, const std::vector<bool>& cellular, int x) {
  int n = static_cast<int>(le.size());
  for (int y = 0; y < n; ++y) {
    if (!cellular[y] || !le[y][x]) continue;
    bool greatest = true;
    for (int z = 0; z < n; ++z) greatest = greatest && (!cellular[z] || !le[z][x] || le[z][y]);
    if (greatest) return y;
  }
  return std::nullopt;
}

std::size_t closure_count(const Relation& le) {
  int n = static_cast<int>(le.size());
  std::size_t count = 0;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<bool> s(n);
    for (int k = 0; k < n; ++k) s[k] = mask >> k & 1;
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = poset_reflection(le, s, x).has_value();
    count += ok;
  }
  return count;
}

std::size_t galois_count(const Relation& p, const Relation& q) {
  int n = static_cast<int>(p.size()), m = static_cast<int>(q.size());
  auto maps = [](int from, int to) {
    std::vector<std::vector<int>> out;
    std::vector<int> f(from, 0);
    while (true) {
      out.push_back(f);
      int k = from;
      while (k > 0 && ++f[k - 1] == to) f[--k] = 0;
      if (k == 0) break;
    }
    return out;
  };
  std::size_t count = 0;
  for (const auto& f : maps(n, m)) {
    for (const auto& g : maps(m, n)) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x) {
        for (int y = 0; y < m && ok; ++y) ok = q[f[x]][y] == p[x][g[y]];
      }
      count += ok;
    }
  }
  return count;
}

std::size_t poset_count(int n) {
  std::set<std::vector<bool>> seen;
  int pairs = n * n;
  for (long mask = 0; mask < (1L << pairs); ++mask) {
    Relation r(n, std::vector<bool>(n));
    for (int k = 0; k < pairs; ++k) r[k / n][k % n] = mask >> k & 1;
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      ok = r[a][a];
      for (int b = 0; b < n && ok; ++b) {
        if (a != b && r[a][b] && r[b][a]) ok = false;
        for (int c = 0; c < n && ok; ++c) ok = !(r[a][b] && r[b][c]) || r[a][c];
      }
    }
    if (!ok) continue;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<bool> best;
    do {
      std::vector<bool> code(pairs);
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) code[perm[a] * n + perm[b]] = r[a][b];
      }
      if (best.empty() || code < best) best = code;
    } while (std::next_permutation(perm.begin(), perm.end()));
    seen.insert(best);
  }
  return seen.size();
}

}  // namespace oracle
