#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace catloc {

enum class Obj : std::uint32_t {};
enum class Mor : std::uint32_t {};

constexpr std::uint32_t index(Obj o) { return static_cast<std::uint32_t>(o); }
constexpr std::uint32_t index(Mor m) { return static_cast<std::uint32_t>(m); }

/// Marks a composition table entry that was never filled in.
inline constexpr Mor kNoMorphism{0xffffffffu};

class FiniteCategory;
using CategoryPtr = std::shared_ptr<const FiniteCategory>;

/// One violated law, with the offending ids spelled out by name.
struct Violation {
  std::string law;
  std::string where;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct LawReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string law, std::string where) { violations.push_back({std::move(law), std::move(where)}); }
  void append(const LawReport& other, const std::string& prefix = {});
};

/// A set of objects of one category, stored as a membership mask.
class ObjectSet {
 public:
  ObjectSet() = default;
  explicit ObjectSet(std::size_t object_count) : mask_(object_count, false) {}

  bool contains(Obj o) const { return mask_[index(o)]; }
  void insert(Obj o) { mask_[index(o)] = true; }
  void erase(Obj o) { mask_[index(o)] = false; }
  std::size_t universe() const { return mask_.size(); }
  std::size_t size() const;
  std::vector<Obj> members() const;

  friend bool operator==(const ObjectSet&, const ObjectSet&) = default;
  friend bool operator<(const ObjectSet& a, const ObjectSet& b) { return a.mask_ < b.mask_; }

 private:
  std::vector<bool> mask_;
};

/// A finite category with a fully materialized composition table.
///
/// Objects and morphisms are numbered in insertion order, which is the
/// canonical order used for every tie-break downstream. Hom-sets list
/// their morphisms in increasing id order. Instances are immutable and
/// always handled through CategoryPtr.
class FiniteCategory : public std::enable_shared_from_this<FiniteCategory> {
 public:
  const std::string& name() const { return name_; }

  std::size_t object_count() const { return object_names_.size(); }
  std::size_t morphism_count() const { return source_.size(); }
  const std::vector<Obj>& objects() const { return objects_; }
  const std::vector<Mor>& morphisms() const { return morphisms_; }

  const std::string& name_of(Obj o) const { return object_names_.at(index(o)); }
  const std::string& name_of(Mor m) const { return morphism_names_.at(index(m)); }
  std::optional<Obj> find_object(const std::string& name) const;
  std::optional<Mor> find_morphism(const std::string& name) const;
  Obj object(const std::string& name) const;      // throws UnknownId
  Mor morphism(const std::string& name) const;    // throws UnknownId

  Obj source(Mor m) const { return source_[index(m)]; }
  Obj target(Mor m) const { return target_[index(m)]; }
  Mor identity(Obj o) const { return identity_[index(o)]; }
  bool is_identity(Mor m) const { return identity_[index(source(m))] == m; }

  /// Morphisms a -> b in increasing id order.
  std::span<const Mor> hom(Obj a, Obj b) const { return homs_[hom_slot(a, b)]; }
  /// Position of m inside hom(source(m), target(m)).
  std::uint32_t local_index(Mor m) const { return local_index_[index(m)]; }

  /// g o f. Throws ShapeMismatch when target(f) != source(g). Returns
  /// kNoMorphism only for tables that were built with holes.
  Mor compose(Mor g, Mor f) const;
  /// g o f without the shape check.
  Mor compose_unchecked(Mor g, Mor f) const {
    return table_[table_offset(source(f), target(f), target(g)) +
                  std::size_t{local_index(g)} * homs_[hom_slot(source(f), target(f))].size() + local_index(f)];
  }

  /// The two-sided inverse of m, if m is an isomorphism.
  std::optional<Mor> inverse(Mor m) const {
    Mor inv = inverse_[index(m)];
    return inv == kNoMorphism ? std::nullopt : std::optional<Mor>(inv);
  }
  bool is_isomorphism(Mor m) const { return inverse_[index(m)] != kNoMorphism; }

  /// Cached opposite category; opposite(opposite(c)) is c itself.
  CategoryPtr opposite() const;

  friend bool operator==(const FiniteCategory& a, const FiniteCategory& b);

 private:
  friend class CategoryBuilder;
  FiniteCategory() = default;

  std::size_t hom_slot(Obj a, Obj b) const { return std::size_t{index(a)} * object_count() + index(b); }
  std::size_t table_offset(Obj a, Obj b, Obj c) const {
    return offsets_[(std::size_t{index(a)} * object_count() + index(b)) * object_count() + index(c)];
  }
  void index_names();
  void layout();
  template <class Fill>
  void fill_table(Fill&& fill);
  void compute_inverses();

  std::string name_;
  std::vector<std::string> object_names_;
  std::vector<std::string> morphism_names_;
  std::vector<Obj> objects_;
  std::vector<Mor> morphisms_;
  std::vector<Obj> source_;
  std::vector<Obj> target_;
  std::vector<Mor> identity_;
  std::vector<std::vector<Mor>> homs_;
  std::vector<std::uint32_t> local_index_;
  std::vector<std::size_t> offsets_;
  std::vector<Mor> table_;
  std::vector<Mor> inverse_;
  std::unordered_map<std::string, Obj> object_lookup_;
  std::unordered_map<std::string, Mor> morphism_lookup_;

  mutable std::mutex opposite_mutex_;
  mutable std::shared_ptr<const FiniteCategory> opposite_strong_;
  mutable std::weak_ptr<const FiniteCategory> opposite_weak_;
};

/// Incremental construction of a FiniteCategory.
///
/// add_object creates the identity morphism "id_<name>" right away.
/// Composites with an identity are filled automatically; all others come
/// from set_composite or from the function handed to build().
class CategoryBuilder {
 public:
  explicit CategoryBuilder(std::string name = {}) : name_(std::move(name)) {}

  Obj add_object(std::string name);
  Mor add_morphism(std::string name, Obj source, Obj target);
  /// Records g o f = h. Requires target(f) == source(g); h is stored as given
  /// so that malformed tables can be represented and then diagnosed.
  void set_composite(Mor g, Mor f, Mor h);

  std::size_t object_count() const { return object_names_.size(); }
  std::size_t morphism_count() const { return sources_.size(); }
  Obj source(Mor m) const { return sources_.at(index(m)); }
  Obj target(Mor m) const { return targets_.at(index(m)); }
  Mor identity(Obj o) const { return identities_.at(index(o)); }
  std::optional<Obj> find_object(const std::string& name) const;
  std::optional<Mor> find_morphism(const std::string& name) const;

  /// Composable non-identity pairs (g, f) with no recorded composite.
  std::vector<std::pair<Mor, Mor>> missing_composites() const;

  CategoryPtr build() const;
  /// Builds with g o f = compose(g, f) for every composable non-identity pair.
  template <class ComposeFn>
  CategoryPtr build(ComposeFn&& compose) const {
    return build_impl([&](Mor g, Mor f) -> Mor { return compose(g, f); });
  }

 private:
  static std::uint64_t key(Mor g, Mor f) { return (std::uint64_t{index(g)} << 32) | index(f); }
  CategoryPtr build_impl(const std::function<Mor(Mor, Mor)>& fill) const;

  std::string name_;
  std::vector<std::string> object_names_;
  std::vector<std::string> morphism_names_;
  std::vector<Obj> sources_;
  std::vector<Obj> targets_;
  std::vector<Mor> identities_;
  std::unordered_map<std::string, Obj> object_lookup_;
  std::unordered_map<std::string, Mor> morphism_lookup_;
  std::unordered_map<std::uint64_t, Mor> composites_;
};

/// Associativity, unit laws and typing of the composition table.
LawReport check_category(const FiniteCategory& cat);

/// hom(a, b) as an owning list; throws UnknownId for foreign objects.
std::vector<Mor> hom_set(const FiniteCategory& cat, Obj a, Obj b);

/// Result of an isomorphism test with the inverse when one exists.
struct IsoResult {
  bool is_iso = false;
  std::optional<Mor> inverse;
};
IsoResult is_isomorphism(const FiniteCategory& cat, Mor f);

CategoryPtr opposite(const CategoryPtr& cat);

/// Pointer identity, falling back to structural equality.
bool same_category(const CategoryPtr& a, const CategoryPtr& b);

/// A full subcategory together with the inclusion data.
struct Subcategory {
  CategoryPtr parent;
  CategoryPtr category;
  std::vector<Obj> object_in_parent;
  std::vector<Mor> morphism_in_parent;
  std::vector<std::optional<Obj>> object_from_parent;
  std::vector<std::optional<Mor>> morphism_from_parent;
};
Subcategory full_subcategory(const CategoryPtr& parent, const ObjectSet& objects, std::string name = {});

/// C x D with objects and morphisms enumerated pairwise, first factor major.
struct ProductCategory {
  CategoryPtr left;
  CategoryPtr right;
  CategoryPtr category;
  std::vector<std::pair<Obj, Obj>> object_pairs;
  std::vector<std::pair<Mor, Mor>> morphism_pairs;
  std::unordered_map<std::uint64_t, Mor> morphism_lookup;
  Obj object(Obj a, Obj b) const;
  Mor morphism(Mor f, Mor g) const;
};
ProductCategory product_category(const CategoryPtr& left, const CategoryPtr& right);

/// True when every hom-set has at most one element.
bool is_thin(const FiniteCategory& cat);

/// Objects that are both initial and terminal.
std::vector<Obj> zero_objects(const FiniteCategory& cat);

std::string describe_pair(const FiniteCategory& cat, Mor g, Mor f);

}  // namespace catloc
