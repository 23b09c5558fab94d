#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "catloc/functor.hpp"

namespace catloc {

/// A reflection (L, l) onto a full subcategory of local objects.
struct Localization {
  CategoryPtr category;
  Functor functor;
  NatTransform unit;
  ObjectSet local_objects;
  std::optional<Mor> generator;

  Obj operator()(Obj o) const { return functor(o); }
  Mor operator()(Mor m) const { return functor(m); }
  bool is_local(Obj o) const { return local_objects.contains(o); }
  /// g is an L-equivalence iff L(g) is an isomorphism.
  bool is_equivalence(Mor g) const { return category->is_isomorphism(functor(g)); }

  static Localization identity(const CategoryPtr& cat);
};

/// Precomposition hom(B, X) -> hom(A, X) with f: A -> B.
struct OrthoReport {
  Mor f;
  Obj object;
  /// table[i] is the image of the i-th element of hom(B, X) in hom(A, X).
  std::vector<Mor> table;
  bool is_bijection = false;
};

OrthoReport orthogonal(const FiniteCategory& cat, Mor f, Obj x);
/// Cheaper variant that only answers the bijection question.
bool is_orthogonal(const FiniteCategory& cat, Mor f, Obj x);

/// The f-local objects: those orthogonal to f.
ObjectSet local_objects(const FiniteCategory& cat, Mor f);

/// True iff g is orthogonal to every object of `locals`.
bool is_equivalence(const FiniteCategory& cat, Mor g, const ObjectSet& locals);

/// Morphisms orthogonal to every object of `locals`, as a mask over morphism ids.
std::vector<bool> equivalences(const FiniteCategory& cat, const ObjectSet& locals);

/// Objects orthogonal to every morphism flagged in `morphisms`.
ObjectSet orthogonal_objects(const FiniteCategory& cat, const std::vector<bool>& morphisms);

struct Reflection {
  Obj object;
  Mor unit;
  friend bool operator==(const Reflection&, const Reflection&) = default;
};

/// First (LX, l_X) in canonical order (smallest object id, then smallest
/// unit id) such that precomposition with l_X is a bijection
/// hom(LX, Y) -> hom(X, Y) for every Y in `locals`.
std::optional<Reflection> reflect(const FiniteCategory& cat, const ObjectSet& locals, Obj x);

/// Every pair satisfying the universal property, in canonical order.
std::vector<Reflection> all_reflections(const FiniteCategory& cat, const ObjectSet& locals, Obj x);

/// Reflection onto `locals` assembled into a localization, or nothing if
/// some object has no reflection. Throws TheoremViolation when a lift is not
/// unique or the assembled data fails the localization invariants.
std::optional<Localization> build_reflection(const CategoryPtr& cat, const ObjectSet& locals);

/// L_f: reflection onto the f-local objects.
std::optional<Localization> build_localization(const CategoryPtr& cat, Mor f);

/// Reflections of one category memoized by local class. Sweeps over many
/// generators hit only a handful of distinct classes. Safe to share
/// between threads.
class LocalizationCache {
 public:
  explicit LocalizationCache(CategoryPtr cat) : cat_(std::move(cat)) {}

  const CategoryPtr& category() const { return cat_; }
  std::optional<Localization> reflection(const ObjectSet& locals);
  /// L_f with its generator recorded.
  std::optional<Localization> localization(Mor f);
  std::size_t size() const;

 private:
  CategoryPtr cat_;
  mutable std::mutex mutex_;
  std::map<ObjectSet, std::optional<Localization>> cache_;
};

/// Idempotence, local-object characterization and functor/unit laws.
LawReport check_localization(const Localization& loc);

/// Restriction of L to a full subcategory S when L maps S into S, with the
/// inclusion checked to preserve and reflect local objects and equivalences.
std::optional<Localization> restrict_localization(const Localization& loc, const Subcategory& sub);

/// Composable pairs (g, f) where exactly two of f, g, g o f are
/// equivalences for the class orthogonal to `locals`.
std::vector<std::pair<Mor, Mor>> two_of_three_violations(const FiniteCategory& cat, const ObjectSet& locals);

}  // namespace catloc
