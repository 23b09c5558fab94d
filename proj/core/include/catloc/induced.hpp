#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catloc/comparison.hpp"
#include "catloc/monad.hpp"

namespace catloc {

/// T g is an L-equivalence for every L-equivalence g.
PredicateResult monad_preserves_equivalences(const Monad& t, const Localization& loc);

/// Algebra structures b: T L X -> L X with b o T(l_X) = l_X o a, up to
/// `limit` of them, in id order.
std::vector<Mor> lift_algebra_structure(const Monad& t, const Localization& loc, const Algebra& algebra,
                                        std::size_t limit = 2);

/// Replete classes of objects (unions of isomorphism classes) in canonical
/// order: bit k of the enumeration index selects the k-th class.
std::vector<ObjectSet> replete_classes(const FiniteCategory& cat, const Budget& budget = Budget{});

struct InducedLocalizationReport {
  bool cond_a = false;
  bool cond_b = false;
  bool cond_c = false;
  bool cond_d = false;
  PredicateResult a_witness;
  /// First algebra (object of the EM category) without a unique lifted structure.
  std::optional<Obj> b_witness;
  /// Lifted structure per algebra when it is unique.
  std::vector<std::optional<Mor>> algebra_structures;
  /// First localization on the EM category with L U ~ U L'.
  std::optional<Localization> induced;
  std::optional<NatTransform> lu_iso;
  /// First localization on the EM category for which U preserves and
  /// reflects local objects and equivalences.
  std::optional<Localization> reflected;
  std::size_t classes_examined = 0;

  bool agree() const { return cond_a == cond_b && cond_b == cond_c && cond_c == cond_d; }
};

/// Evaluates the four conditions separately, then requires them to agree
/// (TheoremViolation otherwise).
InducedLocalizationReport induce_localization(const EMCategory& em, const Localization& loc,
                                              const Budget& budget = Budget{});
/// Same evaluation without the final agreement check.
InducedLocalizationReport evaluate_induced_conditions(const EMCategory& em, const Localization& loc,
                                                      const Budget& budget = Budget{});

/// Clauses of the single-morphism theorem for the free/forgetful pair of T.
/// Optional fields are unset when the clause could not be tested because a
/// localization it needs does not exist.
struct FreeImageReport {
  bool testable = false;
  std::vector<std::string> untestable;

  bool t_preserves_f_equivalences = false;
  bool free_localization_exists = false;      // L_{Ff}
  bool lfu_iso_ulff = false;                  // L_f U ~ U L_{Ff}

  bool second_part_applies = false;           // T preserves f-equivalences and L_{Tf} exists
  std::optional<bool> t_preserves_tf_equivalences;
  std::optional<bool> lfu_iso_ltfu;           // L_f U ~ L_{Tf} U
  std::optional<bool> ltf_iso_lttf;           // L_{Tf} ~ L_{TTf}

  std::optional<bool> tf_is_f_equivalence;
  std::optional<bool> ff_is_ftf_equivalence;
  std::optional<bool> lff_same_as_lftf;       // same local classes
  bool t_retract_of_tt = false;
};

FreeImageReport free_image_theorem(const EMCategory& em, Mor f);

/// The three readings of L_{R(x)f} M for an algebra M of a tensor monad.
struct TensorReadings {
  Obj base;              // L_f U M
  Obj module_reading;    // U (L_{Ff} M)
  Obj underlying;        // L_{U F f} U M
  /// Isomorphisms under U M between the readings: base -> module_reading
  /// and base -> underlying, commuting with the units.
  std::optional<Mor> to_module;
  std::optional<Mor> to_underlying;
  bool coincide = false;
};

/// Throws Unsupported when a needed localization does not exist.
TensorReadings tensor_readings(const EMCategory& em, Mor f, Obj module);

struct IdempotentCaseReport {
  ObjectSet t_local;              // objects X with eta_X invertible
  bool lf_preserves_s = false;
  std::optional<bool> lfi_iso_ilkf;
  bool ltf_exists = false;
  bool ltf_preserves_s = false;
  std::optional<bool> lfi_iso_ltfi;
  /// Per T-local object A: (L_f A, L_{Tf} A) in the ambient category.
  std::vector<std::pair<Obj, Obj>> table;
};

/// Requires an idempotent monad and an existing L_f; throws Unsupported otherwise.
IdempotentCaseReport idempotent_case(const Monad& t, Mor f);

/// The same check for many f against one monad, sharing the T-local
/// subcategory and the localization caches.
class IdempotentCaseSweep {
 public:
  explicit IdempotentCaseSweep(const Monad& t);
  IdempotentCaseReport operator()(Mor f);
  const ObjectSet& t_local() const { return t_local_; }

 private:
  Monad t_;
  ObjectSet t_local_;
  Subcategory s_;
  Functor incl_;
  LocalizationCache ambient_;
  LocalizationCache restricted_;
};

}  // namespace catloc
