#pragma once

#include <cstddef>
#include <string>

namespace catloc {

/// Size limits applied by fixture generators and derived constructions.
struct Budget {
  std::size_t max_objects = 64;
  std::size_t max_morphisms = 20000;
  /// Upper bound on candidate reflective classes enumerated on an
  /// Eilenberg-Moore category (2^k for k isomorphism classes).
  std::size_t max_class_candidates = std::size_t{1} << 16;

  /// Defaults, with max_objects overridable through CATLOC_MAX_OBJECTS.
  static Budget from_environment();

  void check(std::size_t objects, std::size_t morphisms, const std::string& what) const;
};

}  // namespace catloc
