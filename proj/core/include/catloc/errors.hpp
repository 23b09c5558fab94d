#pragma once

#include <stdexcept>
#include <string>

namespace catloc {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A name or id that does not belong to the category it was looked up in.
class UnknownId : public Error {
 public:
  using Error::Error;
};

/// Functors, transformations or morphisms whose shapes do not fit together.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/// A computed instance contradicts a statement the engine relies on
/// (a unique lift that is not unique, four equivalent conditions that disagree).
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

/// A fixture or search would exceed the configured size limits.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// The operation needs structure the category does not have (e.g. joins).
class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace catloc
