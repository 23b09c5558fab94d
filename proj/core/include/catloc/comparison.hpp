#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catloc/adjunction.hpp"
#include "catloc/localization.hpp"

namespace catloc {

/// Outcome of a quantified preservation check. On failure exactly one of the
/// witnesses is set.
struct PredicateResult {
  bool holds = true;
  std::optional<Obj> object_witness;
  std::optional<Mor> morphism_witness;

  explicit operator bool() const { return holds; }
};

// All predicates take F: C1 -> C2 with `src` a localization on C1 and `tgt`
// a localization on C2.

/// F X is tgt-local for every src-local X.
PredicateResult preserves_local_objects(const Functor& f, const Localization& src, const Localization& tgt);
/// F g is a tgt-equivalence for every src-equivalence g.
PredicateResult preserves_equivalences(const Functor& f, const Localization& src, const Localization& tgt);
/// X is src-local whenever F X is tgt-local.
PredicateResult reflects_local_objects(const Functor& f, const Localization& src, const Localization& tgt);
/// g is a src-equivalence whenever F g is a tgt-equivalence.
PredicateResult reflects_equivalences(const Functor& f, const Localization& src, const Localization& tgt);

/// Every natural alpha: F L1 => L2 F with alpha o F l1 = l2 F and each
/// component an L2-equivalence, up to `limit` solutions, in canonical order.
std::vector<NatTransform> alpha_solutions(const Functor& f, const Localization& src, const Localization& tgt,
                                          std::size_t limit = 2);
/// Every natural beta: L2 F => F L1 with beta o l2 F = F l1, up to `limit`.
std::vector<NatTransform> beta_solutions(const Functor& f, const Localization& src, const Localization& tgt,
                                         std::size_t limit = 2);

/// The unique alpha when F preserves equivalences, otherwise nothing.
/// Throws TheoremViolation when the search disagrees with the predicate.
std::optional<NatTransform> build_alpha(const Functor& f, const Localization& src, const Localization& tgt);
/// The unique beta when F preserves local objects, otherwise nothing.
std::optional<NatTransform> build_beta(const Functor& f, const Localization& src, const Localization& tgt);

/// alpha o beta and beta o alpha are identities.
bool check_mutually_inverse(const NatTransform& alpha, const NatTransform& beta);

struct ComparisonResult {
  std::optional<NatTransform> alpha;
  std::optional<NatTransform> beta;
  PredicateResult preserves_locals;
  PredicateResult preserves_equivalences;
  bool alpha_is_iso = false;
  bool beta_is_iso = false;
  /// Some natural isomorphism L2 F => F L1 exists.
  bool naturally_isomorphic = false;
  bool mutually_inverse = false;
};

/// Both comparison maps with every cross-check between them: existence
/// against the predicates, iso criteria, and the natural-iso criterion for
/// L2 F and F L1. Throws TheoremViolation on any disagreement.
ComparisonResult compare(const Functor& f, const Localization& src, const Localization& tgt);

/// F L1 => L2 F along the left adjoint of adj (L1 on its source).
std::optional<NatTransform> left_comparison(const Adjunction& adj, const Localization& l1, const Localization& l2);
/// L1 G => G L2 along the right adjoint, characterized by beta o l1 G = G l2.
std::optional<NatTransform> right_comparison(const Adjunction& adj, const Localization& l1, const Localization& l2);

/// From alpha: F L1 => L2 F to beta: L1 G => G L2, as
/// G L2 eps . G alpha G . eta L1 G.
NatTransform mate_of(const NatTransform& alpha, const Adjunction& adj, const Localization& l1,
                     const Localization& l2);
/// From beta: L1 G => G L2 back to F L1 => L2 F, as
/// eps L2 F . F beta F . F L1 eta.
NatTransform mate_inverse(const NatTransform& beta, const Adjunction& adj, const Localization& l1,
                          const Localization& l2);

/// Least upper bound in a thin category; throws Unsupported when missing.
Obj join(const FiniteCategory& cat, const std::vector<Obj>& objects);
/// Greatest lower bound in a thin category; throws Unsupported when missing.
Obj meet(const FiniteCategory& cat, const std::vector<Obj>& objects);
/// True when cat is thin and every nonempty family has a join and a meet.
bool is_lattice(const FiniteCategory& cat);

struct ColimitComparison {
  Obj join_of_local;   // join of the L X_i
  Obj join;            // join of the X_i
  Mor alpha;           // join L X_i -> L(join X_i)
  bool is_equivalence = false;
  Obj local_of_join_of_local;
  Obj local_of_join;
};
ColimitComparison colimit_comparison(const FiniteCategory& cat, const Localization& loc,
                                     const std::vector<Obj>& diagram);

struct LimitComparison {
  Obj meet;
  Obj meet_of_local;
  Mor beta;  // L(meet X_i) -> meet L X_i
  bool is_equivalence = false;
  bool is_isomorphism = false;
};
LimitComparison limit_comparison(const FiniteCategory& cat, const Localization& loc, const std::vector<Obj>& diagram);

/// L x L' acting componentwise on a product category.
Localization product_localization(const ProductCategory& product, const Localization& left,
                                  const Localization& right);

}  // namespace catloc
