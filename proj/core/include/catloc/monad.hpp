#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "catloc/adjunction.hpp"
#include "catloc/budget.hpp"

namespace catloc {

/// (T, eta, mu) on a finite category.
struct Monad {
  Functor functor;
  NatTransform unit;
  NatTransform mult;
  std::string name;

  const CategoryPtr& category() const { return functor.source; }
  Obj operator()(Obj o) const { return functor(o); }
  Mor operator()(Mor m) const { return functor(m); }

  static Monad identity(const CategoryPtr& cat);
};

/// Functor/transformation laws, associativity and both unit laws of mu.
LawReport check_monad(const Monad& m);

/// (GF, eta, G eps F) for F -| G.
Monad monad_of(const Adjunction& adj);

/// True iff every component of mu is an isomorphism.
bool is_idempotent(const Monad& m);

/// A natural isomorphism T1 => T2 that carries eta1 to eta2 and mu1 to mu2.
std::optional<NatTransform> find_monad_iso(const Monad& a, const Monad& b);

struct Algebra {
  Obj carrier;
  Mor structure;
  friend bool operator==(const Algebra&, const Algebra&) = default;
};

/// a o T(a) = a o mu_X and a o eta_X = id_X.
bool is_algebra(const Monad& m, Obj carrier, Mor structure);

/// The Eilenberg-Moore category of T materialized as a FiniteCategory,
/// with the free/forgetful adjunction F -| U.
///
/// Algebras are found by exhaustive search over (X, a: TX -> X) and ordered
/// by carrier id, then structure morphism id. Object k of `category` is
/// algebras[k]; morphism m of `category` lies over underlying[m].
struct EMCategory {
  Monad monad;
  std::vector<Algebra> algebras;
  CategoryPtr category;
  std::vector<Mor> underlying;
  Functor free;
  Functor forgetful;
  Adjunction adjunction;

  const Algebra& algebra(Obj o) const { return algebras[index(o)]; }
  std::optional<Obj> find_algebra(Obj carrier, Mor structure) const;
  /// The algebra morphism (X,a) -> (Y,b) lying over phi, if phi is one.
  std::optional<Mor> lift(Obj from, Obj to, Mor phi) const;
  /// F(f) as a morphism (TA, mu_A) -> (TB, mu_B).
  Mor free_image(Mor f) const { return free(f); }

 private:
  friend EMCategory eilenberg_moore(const Monad&, const Budget&);
  std::unordered_map<std::uint64_t, Mor> lookup_;
};

EMCategory eilenberg_moore(const Monad& m, const Budget& budget = Budget{});

}  // namespace catloc
