#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catloc/category.hpp"

namespace catloc {

/// A structure-preserving map between two finite categories, stored as
/// explicit object and morphism tables.
struct Functor {
  CategoryPtr source;
  CategoryPtr target;
  std::vector<Obj> objects;
  std::vector<Mor> morphisms;
  std::string name;

  Obj operator()(Obj o) const { return objects[index(o)]; }
  Mor operator()(Mor m) const { return morphisms[index(m)]; }

  static Functor identity(const CategoryPtr& cat);
};

/// A family of components F(X) -> G(X), one per object of the common source.
struct NatTransform {
  Functor source;
  Functor target;
  std::vector<Mor> components;
  std::string name;

  Mor operator[](Obj o) const { return components[index(o)]; }

  static NatTransform identity(const Functor& f);
};

LawReport check_functor(const Functor& f);
LawReport check_nat(const NatTransform& t);

bool same_functor(const Functor& a, const Functor& b);
bool same_nat(const NatTransform& a, const NatTransform& b);

/// g o f as functors (apply f first).
Functor compose(const Functor& g, const Functor& f);

/// t o s, vertical composite of s: F => G and t: G => H.
NatTransform vertical_compose(const NatTransform& t, const NatTransform& s);

/// K t : K F => K G, components K(t_X).
NatTransform whisker(const Functor& k, const NatTransform& t);
/// t H : F H => G H, components t_{H X}.
NatTransform whisker(const NatTransform& t, const Functor& h);

/// Horizontal composite t * s : F' F => G' G for s: F => G and t: F' => G',
/// with components t_{G X} o F'(s_X).
NatTransform horizontal_compose(const NatTransform& t, const NatTransform& s);

Functor opposite(const Functor& f);
/// t: F => G becomes t^op: G^op => F^op with the same components.
NatTransform opposite(const NatTransform& t);

/// True when every component is an isomorphism.
bool is_natural_isomorphism(const NatTransform& t);

/// The componentwise inverse of a natural isomorphism.
NatTransform inverse(const NatTransform& t);

/// First natural isomorphism F => G in canonical order (smallest component
/// ids, objects in id order), found by backtracking with naturality pruning.
std::optional<NatTransform> find_natural_iso(const Functor& f, const Functor& g);

/// First natural transformation F => G whose component at each X is drawn
/// from candidates(X), in canonical order. When accept is given, complete
/// assignments it rejects are skipped and the search continues.
std::optional<NatTransform> find_natural_transformation(
    const Functor& f, const Functor& g, const std::function<std::vector<Mor>(Obj)>& candidates,
    const std::function<bool(const NatTransform&)>& accept = {});

}  // namespace catloc
