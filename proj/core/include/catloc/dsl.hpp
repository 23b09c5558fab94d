#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "catloc/budget.hpp"
#include "catloc/errors.hpp"
#include "catloc/fixtures.hpp"

namespace catloc::dsl {

/// Source location of a declaration. Positions never take part in AST
/// equality, so a reprinted document compares equal to its source.
struct Position {
  int line = 0;
  int column = 0;
  friend bool operator==(const Position&, const Position&) { return true; }
  std::string str() const { return std::to_string(line) + ":" + std::to_string(column); }
};

class SyntaxError : public Error {
 public:
  SyntaxError(Position pos, const std::string& message) : Error(pos.str() + ": " + message), position(pos) {}
  Position position;
};

/// Unresolved identifier, missing composite, composition type mismatch and
/// other semantic errors found while building engine objects.
class ResolveError : public Error {
 public:
  ResolveError(Position pos, const std::string& message) : Error(pos.str() + ": " + message), position(pos) {}
  Position position;
};

/// An argument value: a name, an arrow a->b, or a list [x, y].
struct Term {
  enum class Kind { name, arrow, list };
  Kind kind = Kind::name;
  std::string text;
  std::string target;
  std::vector<std::string> items;
  friend bool operator==(const Term&, const Term&) = default;
};

struct Arg {
  std::string key;
  Term value;
  friend bool operator==(const Arg&, const Arg&) = default;
};

struct MorphismDecl {
  std::string name, source, target;
  Position position;
  friend bool operator==(const MorphismDecl&, const MorphismDecl&) = default;
};

struct CompositeDecl {
  std::string g, f, h;
  Position position;
  friend bool operator==(const CompositeDecl&, const CompositeDecl&) = default;
};

struct CategoryDecl {
  std::string name;
  std::vector<std::string> objects;
  std::vector<MorphismDecl> morphisms;
  std::vector<CompositeDecl> composites;
  Position position;
  friend bool operator==(const CategoryDecl&, const CategoryDecl&) = default;
};

struct MapEntry {
  std::string from, to;
  Position position;
  friend bool operator==(const MapEntry&, const MapEntry&) = default;
};

struct FunctorDecl {
  std::string name, source, target;
  std::vector<MapEntry> objects;
  std::vector<MapEntry> morphisms;  // identities may be omitted
  Position position;
  friend bool operator==(const FunctorDecl&, const FunctorDecl&) = default;
};

/// Source and target are functor expressions: names joined by '.' for
/// composites (T.T), and Id_C for the identity on C.
struct NatDecl {
  std::string name, source, target;
  std::vector<MapEntry> components;
  Position position;
  friend bool operator==(const NatDecl&, const NatDecl&) = default;
};

struct MonadDecl {
  std::string name, functor, unit, mult;
  Position position;
  friend bool operator==(const MonadDecl&, const MonadDecl&) = default;
};

struct AdjunctionDecl {
  std::string name, left, right, unit, counit;
  Position position;
  friend bool operator==(const AdjunctionDecl&, const AdjunctionDecl&) = default;
};

/// `fixture kind(params) as name;` with every parameter spelled out.
struct FixtureDecl {
  std::string kind;
  std::vector<Arg> params;
  std::string name;
  Position position;
  friend bool operator==(const FixtureDecl&, const FixtureDecl&) = default;
};

using Declaration = std::variant<CategoryDecl, FunctorDecl, NatDecl, MonadDecl, AdjunctionDecl, FixtureDecl>;

/// A command with its arguments keyed and in signature order.
struct Task {
  std::string name;
  std::vector<Arg> args;
  Position position;
  friend bool operator==(const Task&, const Task&) = default;

  const Term* arg(const std::string& key) const;
};

struct Document {
  std::vector<Declaration> declarations;
  std::vector<Task> tasks;
  friend bool operator==(const Document&, const Document&) = default;
};

const std::string& declared_name(const Declaration& d);
Position declared_at(const Declaration& d);

/// Throws SyntaxError with line and column.
Document parse(const std::string& text);
/// Canonical text; parse(print(doc)) == doc.
std::string print(const Document& doc);
std::string print(const Term& term);

// ---------------------------------------------------------------------------
// Resolution

using Entity = std::variant<CategoryPtr, Functor, NatTransform, Monad, Adjunction>;

struct Environment {
  std::map<std::string, Entity> entities;
  std::vector<std::string> order;
  std::map<std::string, std::shared_ptr<const fixtures::AbelianSkeleton>> abelian;
  std::map<std::string, std::shared_ptr<const fixtures::GroupSkeleton>> groups;

  const Entity& at(const std::string& name, Position pos) const;
  CategoryPtr category(const std::string& name, Position pos) const;
  const Functor& functor(const std::string& name, Position pos) const;
  /// A functor expression as written in a nat declaration.
  Functor functor_expr(const std::string& text, Position pos) const;
  const Monad& monad(const std::string& name, Position pos) const;
  const Adjunction& adjunction(const std::string& name, Position pos) const;
};

/// Builds every declaration in order. Throws ResolveError, BudgetExceeded.
Environment resolve(const Document& doc, const Budget& budget = Budget::from_environment());

/// Object by name, also trying the name with '/' removed (Z/2 for Z2).
Obj resolve_object(const FiniteCategory& cat, const std::string& name, Position pos);
/// A named morphism, or for a->b the only morphism a -> b, or failing that
/// the only one that does not factor through a zero object.
Mor resolve_morphism(const FiniteCategory& cat, const Term& ref, Position pos);

/// Explicit declarations reproducing engine objects, with all composites
/// of non-identity morphisms listed.
CategoryDecl emit_category(const FiniteCategory& cat, const std::string& name);
FunctorDecl emit_functor(const Functor& f, const std::string& name, const std::string& source,
                         const std::string& target);
NatDecl emit_nat(const NatTransform& t, const std::string& name, const std::string& source,
                 const std::string& target);

/// Every fixture of the document expanded into explicit declarations. A
/// monad fixture M becomes functor M_T, transformations M_eta and M_mu and
/// the monad M.
Document emit_fixtures(const Document& doc, const Budget& budget = Budget::from_environment());

// ---------------------------------------------------------------------------
// Running

inline constexpr int kSchemaVersion = 1;

enum class Status { ok, unsupported, law_failure, theorem_violation, input_error, budget_exceeded };
std::string to_string(Status s);

/// Exit codes: 0 ok, 1 law failure, 2 theorem violation, 3 input error,
/// 4 budget exceeded. A missing localization is reported, not failed.
int exit_code(Status s);

struct RunOptions {
  Budget budget = Budget::from_environment();
  unsigned workers = 1;
  /// Permutes the order tasks are handed to workers; never the results.
  std::uint64_t seed = 0;
  bool timing = false;
  /// Skip tasks and only law-check the declarations.
  bool check_only = false;
};

struct Report {
  nlohmann::ordered_json document;
  Status status = Status::ok;
  int exit_code() const { return dsl::exit_code(status); }
  std::string structured() const;
  std::string text() const;
};

Report run(const Document& doc, const RunOptions& options = {});
/// Parses first; syntax errors become an input-error report.
Report run_text(const std::string& text, const RunOptions& options = {});

}  // namespace catloc::dsl
