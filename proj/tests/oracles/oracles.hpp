#pragma once

// Element-level reference computations, written without the engine, used to
// cross-check what the engine derives.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace oracle {

/// A finite group as an explicit multiplication table; element 0 is the identity.
struct Group {
  int order = 0;
  std::vector<std::vector<int>> op;
};

/// Z/n1 x ... x Z/nk with elements in mixed radix.
Group cyclic_product(const std::vector<int>& orders);
Group symmetric3();
Group dihedral4();
Group quaternion8();

/// All homomorphisms as element maps, by backtracking over element images.
std::vector<std::vector<int>> homomorphisms(const Group& a, const Group& b);
std::size_t hom_count(const Group& a, const Group& b);

/// Hom(A, B) for abelian B, with pointwise addition.
Group hom_group(const Group& a, const Group& b);
/// Hom(B, Z/e) with pointwise addition.
Group dual(const Group& b, int e);
/// |A (x) B|, through bilinear maps into Z/e: Bil(A x B, Z/e) = Hom(A, Hom(B, Z/e))
/// and a finite abelian group has as many characters as elements.
std::size_t tensor_order(const Group& a, const Group& b);
/// The group Hom(A, Hom(B, Z/e)), isomorphic to A (x) B.
Group tensor_dual(const Group& a, const Group& b);

/// Number of x with n x = 0 for n = 1..limit: determines a finite abelian
/// group up to isomorphism.
std::vector<int> torsion_profile(const Group& g, int limit = 8);

/// Order and torsion profile of G / [G, G].
struct Abelianized {
  int order = 0;
  std::vector<int> profile;
};
Abelianized abelianize(const Group& g);

// Posets given by their order relation.
using Relation = std::vector<std::vector<bool>>;

/// Local objects for a <= b: x with (a <= x implies b <= x).
std::vector<bool> poset_locals(const Relation& le, int a, int b);
/// Least local element above x.
std::optional<int> poset_reflection(const Relation& le, const std::vector<bool>& locals, int x);
/// A-cellular elements: y such that for all u <= v with (A <= u iff A <= v),
/// (y <= u iff y <= v).
std::vector<bool> poset_cellular(const Relation& le, int a);
/// Greatest cellular element below x.
std::optional<int> poset_coreflection(const Relation& le, const std::vector<bool>& cellular, int x);

/// Closure operators counted as subsets in which every element has a least upper member.
std::size_t closure_count(const Relation& le);
/// Pairs of maps (f, g) with f x <= y iff x <= g y, by brute force.
std::size_t galois_count(const Relation& p, const Relation& q);
/// Number of pairwise non-isomorphic posets on n elements, by brute force.
std::size_t poset_count(int n);

}  // namespace oracle
