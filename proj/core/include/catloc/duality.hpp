#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catloc/induced.hpp"

namespace catloc {

/// A coreflection (C, c) onto a full subcategory of colocal objects.
struct Colocalization {
  CategoryPtr category;
  Functor functor;
  NatTransform counit;  // C => Id
  ObjectSet colocal_objects;
  std::optional<Obj> generator;

  Obj operator()(Obj o) const { return functor(o); }
  Mor operator()(Mor m) const { return functor(m); }
  bool is_colocal(Obj o) const { return colocal_objects.contains(o); }
  bool is_equivalence(Mor g) const { return category->is_isomorphism(functor(g)); }

  static Colocalization identity(const CategoryPtr& cat);
};

/// Postcomposition hom(A, U) -> hom(A, V) with g: U -> V.
struct CoOrthoReport {
  Obj object;
  Mor g;
  std::vector<Mor> table;
  bool is_bijection = false;
};

CoOrthoReport co_orthogonal(const FiniteCategory& cat, Obj a, Mor g);
bool is_co_orthogonal(const FiniteCategory& cat, Obj a, Mor g);

/// A-equivalences as a mask over morphism ids.
std::vector<bool> cellular_equivalences(const FiniteCategory& cat, Obj a);
/// Objects co-orthogonal to every flagged morphism.
ObjectSet co_orthogonal_objects(const FiniteCategory& cat, const std::vector<bool>& morphisms);
/// The A-cellular objects.
ObjectSet cellular_objects(const FiniteCategory& cat, Obj a);
/// Morphisms co-orthogonal to every object of `colocals`.
std::vector<bool> coequivalences(const FiniteCategory& cat, const ObjectSet& colocals);

/// First (CX, c_X) in canonical order with postcomposition by c_X a
/// bijection hom(Y, CX) -> hom(Y, X) for every Y in `colocals`.
std::optional<Reflection> coreflect(const FiniteCategory& cat, const ObjectSet& colocals, Obj x);

/// Direct coreflection search; nothing when some object has no coreflection.
std::optional<Colocalization> build_coreflection(const CategoryPtr& cat, const ObjectSet& colocals);
/// C_A computed directly.
std::optional<Colocalization> build_cellularization(const CategoryPtr& cat, Obj a);
/// C_A computed as a reflection on the opposite category and carried back.
std::optional<Colocalization> transported_cellularization(const CategoryPtr& cat, Obj a);

LawReport check_colocalization(const Colocalization& col);

/// A localization on cat^op read as a colocalization on cat.
Colocalization dual_transport(const Localization& on_opposite);
/// A colocalization on cat read as a localization on cat^op.
Localization to_opposite(const Colocalization& col);

/// Same functor tables, counit components and colocal class.
bool same_colocalization(const Colocalization& a, const Colocalization& b);

// Preservation predicates for F: C1 -> C2 with colocalizations src, tgt.
PredicateResult preserves_colocal_objects(const Functor& f, const Colocalization& src, const Colocalization& tgt);
PredicateResult preserves_coequivalences(const Functor& f, const Colocalization& src, const Colocalization& tgt);
PredicateResult reflects_colocal_objects(const Functor& f, const Colocalization& src, const Colocalization& tgt);
PredicateResult reflects_coequivalences(const Functor& f, const Colocalization& src, const Colocalization& tgt);

struct CoComparisonResult {
  std::optional<NatTransform> alpha;  // F C1 => C2 F with c2 F . alpha = F c1
  std::optional<NatTransform> beta;   // C2 F => F C1 with F c1 . beta = c2 F, components equivalences
  PredicateResult preserves_colocals;
  PredicateResult preserves_equivalences;
  bool alpha_is_iso = false;
  bool beta_is_iso = false;
  /// The same maps obtained from the primal comparison on opposites agree.
  bool transport_agrees = false;
};

/// Direct search for both comparison maps, cross-checked against the
/// predicates and against the primal comparison run on opposite categories.
CoComparisonResult co_compare(const Functor& f, const Colocalization& src, const Colocalization& tgt);

struct CoInducedReport {
  bool cond_a = false;  // T preserves colocal objects
  bool cond_b = false;  // unique lifted structure on C X
  bool cond_c = false;  // C U ~ U C'
  bool cond_d = false;  // U preserves and reflects colocal objects and equivalences
  std::optional<Obj> a_witness;
  std::optional<Obj> b_witness;
  std::optional<Colocalization> induced;
  std::optional<Colocalization> reflected;

  bool agree() const { return cond_a == cond_b && cond_b == cond_c && cond_c == cond_d; }
};

/// Structures b: T C X -> C X with a o T(c_X) = c_X o b, up to `limit`.
std::vector<Mor> colift_algebra_structure(const Monad& t, const Colocalization& col, const Algebra& algebra,
                                          std::size_t limit = 2);

CoInducedReport evaluate_coinduced_conditions(const EMCategory& em, const Colocalization& col,
                                              const Budget& budget = Budget{});
/// Throws TheoremViolation when the four conditions disagree.
CoInducedReport coinduce_colocalization(const EMCategory& em, const Colocalization& col,
                                        const Budget& budget = Budget{});

/// Cellular facts along an adjunction F -| G for an object A of the source.
struct CoOrthogonalityReport {
  bool equivalences_match = false;  // g is an FA-equivalence iff G g is an A-equivalence
  bool cellular_preserved = false;  // F sends A-cellular objects to FA-cellular ones
  bool comparisons_tested = false;  // both C_A and C_FA exist
  std::optional<NatTransform> alpha;  // F C_A => C_FA F
  std::optional<NatTransform> beta;   // C_A G => G C_FA
  bool alpha_is_iso = false;
  bool beta_is_iso = false;
};
CoOrthogonalityReport co_orthogonality_along(const Adjunction& adj, Obj a);

struct CellularFreeImageReport {
  bool testable = false;
  std::vector<std::string> untestable;
  bool t_preserves_cellular = false;
  bool cau_iso_ucfa = false;
  bool second_part_applies = false;
  std::optional<bool> t_preserves_ta_cellular;
  std::optional<bool> cau_iso_ctau;
  std::optional<bool> cta_iso_ctta;
};
/// Clauses as stated for C_A along the free/forgetful pair; throws
/// TheoremViolation when a stated equivalence fails.
CellularFreeImageReport cellular_free_image_theorem(const EMCategory& em, Obj a);

struct CellularReadings {
  Obj base;            // C_A U M
  Obj module_reading;  // U (C_{FA} M)
  Obj underlying;      // C_{U F A} U M
  std::optional<Mor> to_module;
  std::optional<Mor> to_underlying;
  bool coincide = false;
};
/// Throws Unsupported when a needed cellularization does not exist.
CellularReadings cellular_readings(const EMCategory& em, Obj a, Obj module);

}  // namespace catloc
