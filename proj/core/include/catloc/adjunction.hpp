#pragma once

#include <string>

#include "catloc/functor.hpp"

namespace catloc {

/// F -| G with unit eta: Id => GF and counit eps: FG => Id.
struct Adjunction {
  Functor left;
  Functor right;
  NatTransform unit;
  NatTransform counit;
  std::string name;

  static Adjunction identity(const CategoryPtr& cat);
};

/// Functor and transformation laws plus both triangle identities.
LawReport check_adjunction(const Adjunction& adj);

/// phi: F x -> y  |->  G(phi) o eta_x : x -> G y.
Mor transpose_to_right(const Adjunction& adj, Obj x, Mor phi);
/// psi: x -> G y  |->  eps_y o F(psi) : F x -> y.
Mor transpose_to_left(const Adjunction& adj, Obj y, Mor psi);

/// The full subcategories on which the unit, respectively the counit, is
/// invertible, with F and G restricted between them.
struct RestrictedEquivalence {
  Subcategory unit_part;     // objects x with eta_x iso
  Subcategory counit_part;   // objects y with eps_y iso
  Functor left;              // F restricted
  Functor right;             // G restricted
  NatTransform unit;
  NatTransform counit;
  /// Restricted unit and counit are isomorphisms and F, G land in the parts.
  bool is_equivalence = false;
};
RestrictedEquivalence restricted_equivalence(const Adjunction& adj);

}  // namespace catloc
