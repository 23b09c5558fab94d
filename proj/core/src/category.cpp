#include "catloc/category.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "catloc/budget.hpp"
#include "catloc/errors.hpp"

namespace catloc {

Budget Budget::from_environment() {
  Budget budget;
  if (const char* value = std::getenv("CATLOC_MAX_OBJECTS")) {
    char* end = nullptr;
    unsigned long parsed = std::strtoul(value, &end, 10);
    if (end != value && *end == '\0' && parsed > 0) budget.max_objects = parsed;
  }
  return budget;
}

void Budget::check(std::size_t objects, std::size_t morphisms, const std::string& what) const {
  if (objects > max_objects) {
    throw BudgetExceeded(what + ": " + std::to_string(objects) + " objects exceeds the limit of " +
                         std::to_string(max_objects));
  }
  if (morphisms > max_morphisms) {
    throw BudgetExceeded(what + ": " + std::to_string(morphisms) + " morphisms exceeds the limit of " +
                         std::to_string(max_morphisms));
  }
}

void LawReport::append(const LawReport& other, const std::string& prefix) {
  for (const auto& v : other.violations) {
    violations.push_back({prefix.empty() ? v.law : prefix + ": " + v.law, v.where});
  }
}

std::size_t ObjectSet::size() const { return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), true)); }

std::vector<Obj> ObjectSet::members() const {
  std::vector<Obj> out;
  for (std::size_t i = 0; i < mask_.size(); ++i) {
    if (mask_[i]) out.push_back(Obj{static_cast<std::uint32_t>(i)});
  }
  return out;
}

std::optional<Obj> FiniteCategory::find_object(const std::string& name) const {
  auto it = object_lookup_.find(name);
  if (it == object_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<Mor> FiniteCategory::find_morphism(const std::string& name) const {
  auto it = morphism_lookup_.find(name);
  if (it == morphism_lookup_.end()) return std::nullopt;
  return it->second;
}

Obj FiniteCategory::object(const std::string& name) const {
  if (auto o = find_object(name)) return *o;
  throw UnknownId("unknown object '" + name + "' in category '" + name_ + "'");
}

Mor FiniteCategory::morphism(const std::string& name) const {
  if (auto m = find_morphism(name)) return *m;
  throw UnknownId("unknown morphism '" + name + "' in category '" + name_ + "'");
}

Mor FiniteCategory::compose(Mor g, Mor f) const {
  if (index(g) >= morphism_count() || index(f) >= morphism_count()) {
    throw UnknownId("compose: morphism id out of range in '" + name_ + "'");
  }
  if (target(f) != source(g)) {
    throw ShapeMismatch("compose: " + name_of(g) + " o " + name_of(f) + " is not composable");
  }
  return compose_unchecked(g, f);
}

void FiniteCategory::index_names() {
  objects_.clear();
  morphisms_.clear();
  object_lookup_.clear();
  morphism_lookup_.clear();
  for (std::size_t i = 0; i < object_names_.size(); ++i) {
    objects_.push_back(Obj{static_cast<std::uint32_t>(i)});
    object_lookup_.emplace(object_names_[i], objects_.back());
  }
  for (std::size_t i = 0; i < morphism_names_.size(); ++i) {
    morphisms_.push_back(Mor{static_cast<std::uint32_t>(i)});
    morphism_lookup_.emplace(morphism_names_[i], morphisms_.back());
  }
}

void FiniteCategory::layout() {
  const std::size_t n = object_count();
  homs_.assign(n * n, {});
  local_index_.assign(morphism_count(), 0);
  for (Mor m : morphisms_) {
    auto& hom = homs_[hom_slot(source(m), target(m))];
    local_index_[index(m)] = static_cast<std::uint32_t>(hom.size());
    hom.push_back(m);
  }
  offsets_.assign(n * n * n, 0);
  std::size_t total = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        offsets_[(a * n + b) * n + c] = total;
        total += homs_[a * n + b].size() * homs_[b * n + c].size();
      }
    }
  }
  table_.assign(total, kNoMorphism);
}

template <class Fill>
void FiniteCategory::fill_table(Fill&& fill) {
  const std::size_t n = object_count();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto& first = homs_[a * n + b];
      if (first.empty()) continue;
      for (std::size_t c = 0; c < n; ++c) {
        const auto& second = homs_[b * n + c];
        std::size_t base = offsets_[(a * n + b) * n + c];
        for (std::size_t gi = 0; gi < second.size(); ++gi) {
          for (std::size_t fi = 0; fi < first.size(); ++fi) {
            table_[base + gi * first.size() + fi] = fill(second[gi], first[fi]);
          }
        }
      }
    }
  }
}

void FiniteCategory::compute_inverses() {
  inverse_.assign(morphism_count(), kNoMorphism);
  for (Mor f : morphisms_) {
    Obj a = source(f);
    Obj b = target(f);
    for (Mor g : hom(b, a)) {
      if (compose_unchecked(g, f) == identity(a) && compose_unchecked(f, g) == identity(b)) {
        inverse_[index(f)] = g;
        break;
      }
    }
  }
}

CategoryPtr FiniteCategory::opposite() const {
  std::lock_guard lock(opposite_mutex_);
  if (opposite_strong_) return opposite_strong_;
  if (auto back = opposite_weak_.lock()) return back;
  auto op = std::shared_ptr<FiniteCategory>(new FiniteCategory());
  const std::string suffix = "^op";
  if (name_.size() >= suffix.size() && name_.compare(name_.size() - suffix.size(), suffix.size(), suffix) == 0) {
    op->name_ = name_.substr(0, name_.size() - suffix.size());
  } else {
    op->name_ = name_ + suffix;
  }
  op->object_names_ = object_names_;
  op->morphism_names_ = morphism_names_;
  op->source_ = target_;
  op->target_ = source_;
  op->identity_ = identity_;
  op->index_names();
  op->layout();
  op->fill_table([this](Mor g, Mor f) { return compose_unchecked(f, g); });
  op->compute_inverses();
  op->opposite_weak_ = weak_from_this();
  opposite_strong_ = op;
  return op;
}

bool operator==(const FiniteCategory& a, const FiniteCategory& b) {
  return a.name_ == b.name_ && a.object_names_ == b.object_names_ && a.morphism_names_ == b.morphism_names_ &&
         a.source_ == b.source_ && a.target_ == b.target_ && a.identity_ == b.identity_ && a.table_ == b.table_;
}

Obj CategoryBuilder::add_object(std::string name) {
  if (object_lookup_.contains(name)) throw ShapeMismatch("duplicate object '" + name + "'");
  Obj o{static_cast<std::uint32_t>(object_names_.size())};
  object_lookup_.emplace(name, o);
  object_names_.push_back(name);
  identities_.push_back(add_morphism("id_" + name, o, o));
  return o;
}

Mor CategoryBuilder::add_morphism(std::string name, Obj source, Obj target) {
  if (index(source) >= object_names_.size() || index(target) >= object_names_.size()) {
    throw UnknownId("morphism '" + name + "' refers to an unknown object");
  }
  if (morphism_lookup_.contains(name)) throw ShapeMismatch("duplicate morphism '" + name + "'");
  Mor m{static_cast<std::uint32_t>(morphism_names_.size())};
  morphism_lookup_.emplace(name, m);
  morphism_names_.push_back(std::move(name));
  sources_.push_back(source);
  targets_.push_back(target);
  return m;
}

void CategoryBuilder::set_composite(Mor g, Mor f, Mor h) {
  if (index(g) >= sources_.size() || index(f) >= sources_.size() || index(h) >= sources_.size()) {
    throw UnknownId("set_composite: morphism id out of range");
  }
  if (targets_[index(f)] != sources_[index(g)]) {
    throw ShapeMismatch("set_composite: " + morphism_names_[index(g)] + " o " + morphism_names_[index(f)] +
                        " is not composable");
  }
  composites_[key(g, f)] = h;
}

std::optional<Obj> CategoryBuilder::find_object(const std::string& name) const {
  auto it = object_lookup_.find(name);
  if (it == object_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<Mor> CategoryBuilder::find_morphism(const std::string& name) const {
  auto it = morphism_lookup_.find(name);
  if (it == morphism_lookup_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<Mor, Mor>> CategoryBuilder::missing_composites() const {
  std::vector<std::pair<Mor, Mor>> missing;
  auto is_id = [&](Mor m) { return identities_[index(sources_[index(m)])] == m; };
  for (std::size_t fi = 0; fi < sources_.size(); ++fi) {
    Mor f{static_cast<std::uint32_t>(fi)};
    if (is_id(f)) continue;
    for (std::size_t gi = 0; gi < sources_.size(); ++gi) {
      Mor g{static_cast<std::uint32_t>(gi)};
      if (is_id(g) || sources_[gi] != targets_[fi]) continue;
      if (!composites_.contains(key(g, f))) missing.emplace_back(g, f);
    }
  }
  return missing;
}

CategoryPtr CategoryBuilder::build() const {
  return build_impl([](Mor, Mor) { return kNoMorphism; });
}

CategoryPtr CategoryBuilder::build_impl(const std::function<Mor(Mor, Mor)>& fill) const {
  auto cat = std::shared_ptr<FiniteCategory>(new FiniteCategory());
  cat->name_ = name_;
  cat->object_names_ = object_names_;
  cat->morphism_names_ = morphism_names_;
  cat->source_ = sources_;
  cat->target_ = targets_;
  cat->identity_ = identities_;
  cat->index_names();
  cat->layout();
  cat->fill_table([&](Mor g, Mor f) -> Mor {
    if (identities_[index(sources_[index(f)])] == f) return g;
    if (identities_[index(sources_[index(g)])] == g) return f;
    if (auto it = composites_.find(key(g, f)); it != composites_.end()) return it->second;
    return fill(g, f);
  });
  cat->compute_inverses();
  return cat;
}

std::string describe_pair(const FiniteCategory& cat, Mor g, Mor f) {
  return "(" + cat.name_of(g) + ", " + cat.name_of(f) + ")";
}

LawReport check_category(const FiniteCategory& cat) {
  LawReport report;
  for (Obj o : cat.objects()) {
    Mor id = cat.identity(o);
    if (cat.source(id) != o || cat.target(id) != o) report.add("identity typing", cat.name_of(o));
  }
  // Typing of every composite, then unit laws, then associativity.
  for (Mor f : cat.morphisms()) {
    for (Obj c : cat.objects()) {
      for (Mor g : cat.hom(cat.target(f), c)) {
        Mor h = cat.compose_unchecked(g, f);
        if (h == kNoMorphism) {
          report.add("missing composite", describe_pair(cat, g, f));
        } else if (cat.source(h) != cat.source(f) || cat.target(h) != c) {
          report.add("composite typing", describe_pair(cat, g, f) + " -> " + cat.name_of(h));
        }
      }
    }
  }
  if (!report.ok()) return report;
  for (Mor f : cat.morphisms()) {
    if (cat.compose_unchecked(cat.identity(cat.target(f)), f) != f) report.add("left unit", cat.name_of(f));
    if (cat.compose_unchecked(f, cat.identity(cat.source(f))) != f) report.add("right unit", cat.name_of(f));
  }
  const auto& objs = cat.objects();
  for (Obj a : objs) {
    for (Obj b : objs) {
      for (Mor f : cat.hom(a, b)) {
        for (Obj c : objs) {
          for (Mor g : cat.hom(b, c)) {
            Mor gf = cat.compose_unchecked(g, f);
            for (Obj d : objs) {
              for (Mor h : cat.hom(c, d)) {
                if (cat.compose_unchecked(h, gf) != cat.compose_unchecked(cat.compose_unchecked(h, g), f)) {
                  report.add("associativity",
                             "(" + cat.name_of(h) + ", " + cat.name_of(g) + ", " + cat.name_of(f) + ")");
                }
              }
            }
          }
        }
      }
    }
  }
  return report;
}

std::vector<Mor> hom_set(const FiniteCategory& cat, Obj a, Obj b) {
  if (index(a) >= cat.object_count() || index(b) >= cat.object_count()) {
    throw UnknownId("hom_set: unknown object id");
  }
  auto hom = cat.hom(a, b);
  return {hom.begin(), hom.end()};
}

IsoResult is_isomorphism(const FiniteCategory& cat, Mor f) {
  if (index(f) >= cat.morphism_count()) throw UnknownId("is_isomorphism: unknown morphism id");
  auto inv = cat.inverse(f);
  return {inv.has_value(), inv};
}

CategoryPtr opposite(const CategoryPtr& cat) { return cat->opposite(); }

bool same_category(const CategoryPtr& a, const CategoryPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

Subcategory full_subcategory(const CategoryPtr& parent, const ObjectSet& objects, std::string name) {
  Subcategory sub;
  sub.parent = parent;
  sub.object_from_parent.assign(parent->object_count(), std::nullopt);
  sub.morphism_from_parent.assign(parent->morphism_count(), std::nullopt);
  CategoryBuilder builder(name.empty() ? parent->name() + "|sub" : std::move(name));
  // Replay in parent id order so identities keep their relative placement.
  for (Mor m : parent->morphisms()) {
    Obj s = parent->source(m);
    Obj t = parent->target(m);
    if (!objects.contains(s) || !objects.contains(t)) continue;
    if (parent->is_identity(m)) {
      Obj o = builder.add_object(parent->name_of(s));
      sub.object_in_parent.push_back(s);
      sub.object_from_parent[index(s)] = o;
      sub.morphism_in_parent.push_back(m);
      sub.morphism_from_parent[index(m)] = builder.identity(o);
    } else {
      // Parent morphisms can precede the identity of their endpoints only
      // if objects were not created first; builders always create them first.
      Mor local = builder.add_morphism(parent->name_of(m), *sub.object_from_parent[index(s)],
                                       *sub.object_from_parent[index(t)]);
      sub.morphism_in_parent.push_back(m);
      sub.morphism_from_parent[index(m)] = local;
    }
  }
  sub.category = builder.build([&](Mor g, Mor f) -> Mor {
    Mor h = parent->compose_unchecked(sub.morphism_in_parent[index(g)], sub.morphism_in_parent[index(f)]);
    if (h == kNoMorphism) return kNoMorphism;
    return sub.morphism_from_parent[index(h)].value_or(kNoMorphism);
  });
  return sub;
}

Obj ProductCategory::object(Obj a, Obj b) const {
  return Obj{static_cast<std::uint32_t>(index(a) * right->object_count() + index(b))};
}

Mor ProductCategory::morphism(Mor f, Mor g) const {
  auto it = morphism_lookup.find((std::uint64_t{index(f)} << 32) | index(g));
  if (it == morphism_lookup.end()) throw UnknownId("product morphism not found");
  return it->second;
}

ProductCategory product_category(const CategoryPtr& left, const CategoryPtr& right) {
  ProductCategory prod;
  prod.left = left;
  prod.right = right;
  CategoryBuilder builder(left->name() + "x" + right->name());
  for (Obj a : left->objects()) {
    for (Obj b : right->objects()) {
      builder.add_object("(" + left->name_of(a) + "," + right->name_of(b) + ")");
      prod.object_pairs.emplace_back(a, b);
    }
  }
  // Identities were created with the objects; record their pairs first.
  prod.morphism_pairs.resize(builder.morphism_count());
  for (std::size_t i = 0; i < prod.object_pairs.size(); ++i) {
    auto [a, b] = prod.object_pairs[i];
    prod.morphism_pairs[index(builder.identity(Obj{static_cast<std::uint32_t>(i)}))] = {left->identity(a),
                                                                                       right->identity(b)};
  }
  auto& lookup = prod.morphism_lookup;
  auto pair_key = [](Mor f, Mor g) { return (std::uint64_t{index(f)} << 32) | index(g); };
  for (std::size_t i = 0; i < prod.morphism_pairs.size(); ++i) {
    lookup.emplace(pair_key(prod.morphism_pairs[i].first, prod.morphism_pairs[i].second),
                   Mor{static_cast<std::uint32_t>(i)});
  }
  for (Mor f : left->morphisms()) {
    for (Mor g : right->morphisms()) {
      if (left->is_identity(f) && right->is_identity(g)) continue;
      Obj s = prod.object(left->source(f), right->source(g));
      Obj t = prod.object(left->target(f), right->target(g));
      Mor m = builder.add_morphism("(" + left->name_of(f) + "," + right->name_of(g) + ")", s, t);
      prod.morphism_pairs.emplace_back(f, g);
      lookup.emplace(pair_key(f, g), m);
    }
  }
  prod.category = builder.build([&](Mor q, Mor p) -> Mor {
    auto [p1, p2] = prod.morphism_pairs[index(p)];
    auto [q1, q2] = prod.morphism_pairs[index(q)];
    Mor c1 = left->compose_unchecked(q1, p1);
    Mor c2 = right->compose_unchecked(q2, p2);
    auto it = lookup.find(pair_key(c1, c2));
    return it == lookup.end() ? kNoMorphism : it->second;
  });
  return prod;
}

bool is_thin(const FiniteCategory& cat) {
  for (Obj a : cat.objects()) {
    for (Obj b : cat.objects()) {
      if (cat.hom(a, b).size() > 1) return false;
    }
  }
  return true;
}

std::vector<Obj> zero_objects(const FiniteCategory& cat) {
  std::vector<Obj> zeros;
  for (Obj z : cat.objects()) {
    bool zero = true;
    for (Obj x : cat.objects()) {
      if (cat.hom(z, x).size() != 1 || cat.hom(x, z).size() != 1) {
        zero = false;
        break;
      }
    }
    if (zero) zeros.push_back(z);
  }
  return zeros;
}

}  // namespace catloc
