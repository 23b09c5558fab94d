#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catloc/budget.hpp"
#include "catloc/comparison.hpp"
#include "catloc/duality.hpp"
#include "catloc/monad.hpp"

namespace catloc::fixtures {

// ---------------------------------------------------------------------------
// Finite abelian groups

/// Invariant factors d1 | d2 | ... | dk, all > 1; empty for the trivial group.
using Factors = std::vector<int>;

std::string abelian_name(const Factors& factors);

/// One finite abelian group per isomorphism class of order <= max_order,
/// ordered by order, then by number of factors, then lexicographically.
/// A morphism is the tuple of images of the generators, each image written
/// in coordinates of the target's cyclic factors.
struct AbelianSkeleton {
  int max_order = 0;
  CategoryPtr category;
  std::vector<Factors> groups;
  std::vector<std::vector<std::vector<int>>> images;  // per morphism, per source generator

  std::optional<Obj> find(const Factors& factors) const;
  std::optional<Obj> find(const std::string& name) const;
  Obj object(const std::string& name) const;  // throws UnknownId
  const Factors& factors(Obj o) const { return groups[index(o)]; }
  int order(Obj o) const;
  /// The morphism with the given generator images.
  Mor morphism(Obj source, Obj target, const std::vector<std::vector<int>>& images) const;

 private:
  friend AbelianSkeleton abelian_skeleton(int, const Budget&);
  std::vector<std::vector<Mor>> by_ordinal_;  // per (source, target) slot
};

/// Throws BudgetExceeded past the object or morphism budget.
AbelianSkeleton abelian_skeleton(int max_order, const Budget& budget = Budget::from_environment());

/// T A = Z/k (x) A with the unit A -> A/kA and the identity multiplication.
/// Ring names are "Z/k" or "Zk"; throws UnknownId for rings outside the
/// skeleton (such as "Z") and Unsupported for non-cyclic rings.
Monad tensor_monad(const AbelianSkeleton& skeleton, const std::string& ring);

// ---------------------------------------------------------------------------
// Finite groups

struct GroupTable {
  std::string name;
  int order = 0;
  std::vector<std::vector<int>> mul;  // mul[a][b] = a*b, element 0 is the identity
  std::vector<int> generators;
  bool abelian = false;
};

/// Built-in groups of order <= max_order (at most 8), in table order.
std::vector<GroupTable> group_tables(int max_order);

struct GroupSkeleton {
  int max_order = 0;
  CategoryPtr category;
  std::vector<GroupTable> groups;
  std::vector<std::vector<int>> maps;  // per morphism: image of every element

  std::optional<Obj> find(const std::string& name) const;
  Obj object(const std::string& name) const;
  bool is_abelian(Obj o) const { return groups[index(o)].abelian; }
  ObjectSet abelian_objects() const;
};

/// Throws Unsupported for max_order > 8.
GroupSkeleton group_skeleton(int max_order, const Budget& budget = Budget::from_environment());

/// G -> G/[G,G], idempotent; the unit is the identity on abelian groups.
Monad abelianization_monad(const GroupSkeleton& skeleton);

// ---------------------------------------------------------------------------
// Posets

struct Poset {
  int size = 0;
  std::vector<std::vector<bool>> leq;
  bool le(int a, int b) const { return leq[a][b]; }
};

Poset chain(int n);
Poset antichain(int n);
/// Every poset on n elements up to isomorphism, naturally labeled, canonical order.
std::vector<Poset> all_posets(int n);
/// Throws Error when the relation is not a partial order.
void validate(const Poset& p);

/// Objects "0".."n-1", one morphism "x_y" for each x < y.
CategoryPtr poset_category(const Poset& p, const std::string& name = {});
/// Recovers the order from a thin category.
Poset poset_of(const FiniteCategory& cat);

using Operator = std::vector<int>;

/// Monotone, inflationary, idempotent maps; identity first.
std::vector<Operator> closure_operators(const Poset& p);
/// Monotone, deflationary, idempotent maps; identity first.
std::vector<Operator> interior_operators(const Poset& p);

/// A monotone object map as a functor between thin categories.
Functor thin_functor(const CategoryPtr& source, const CategoryPtr& target, const std::vector<Obj>& objects,
                     const std::string& name = {});
/// The unique transformation F => G between functors into a thin category.
std::optional<NatTransform> thin_transformation(const Functor& f, const Functor& g, const std::string& name = {});

Monad closure_monad(const CategoryPtr& poset, const Operator& c);
Localization closure_localization(const CategoryPtr& poset, const Operator& c);
Colocalization interior_colocalization(const CategoryPtr& poset, const Operator& c);

/// Monotone f: P -> Q with monotone right adjoint g, as F -| G.
Adjunction galois_connection(const CategoryPtr& p, const CategoryPtr& q, const std::vector<Obj>& f);
/// Every Galois connection P -> Q, left adjoints in lexicographic order.
std::vector<Adjunction> galois_connections(const CategoryPtr& p, const CategoryPtr& q);

/// Join and meet on a lattice as functors P x P -> P, with the diagonal
/// and the adjunctions join -| diagonal -| meet.
struct LatticeStructure {
  ProductCategory square;
  Functor join;
  Functor meet;
  Functor diagonal;
  Adjunction join_diagonal;
  Adjunction diagonal_meet;
};
/// Throws Unsupported when the category is not a lattice.
LatticeStructure lattice_structure(const CategoryPtr& lattice);

// ---------------------------------------------------------------------------

/// Non-identity morphisms in id order.
std::vector<Mor> enumerate_test_morphisms(const FiniteCategory& cat);

}  // namespace catloc::fixtures
