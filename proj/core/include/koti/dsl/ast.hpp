#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "koti/coevent.hpp"
#include "koti/errors.hpp"

namespace koti::dsl {

struct SourceLoc {
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t offset = 0;
};

// Static or runtime script error, positioned at a source location.
class ScriptError : public Error {
public:
  ScriptError(ErrorKind kind, SourceLoc loc, const std::string& message)
      : Error(kind, message), loc_(loc) {}

  SourceLoc where() const { return loc_; }

private:
  SourceLoc loc_;
};

// Expression over the script's single space: references to declared events
// and props, outcome-set literals, and the classical connectives.
class Expr {
public:
  enum class Kind { Ref, SetLit, Not, And, Or, Zero, One };

  static Expr ref(std::string name);
  static Expr set_lit(std::vector<std::string> members);
  static Expr negate(Expr inner);
  static Expr conj(Expr left, Expr right);
  static Expr disj(Expr left, Expr right);
  static Expr zero();
  static Expr one();

  Kind kind() const;
  const std::string& name() const;                 // Ref
  const std::vector<std::string>& members() const; // SetLit
  Expr child() const;                              // Not
  Expr left() const;                               // And/Or
  Expr right() const;                              // And/Or

  bool operator==(const Expr& other) const; // structural

private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct SpaceDecl {
  std::string name;
  std::vector<std::string> outcomes;
  SourceLoc loc;
};

struct EventDecl {
  std::string name;
  Expr expr;
  SourceLoc loc;
};

// Unasserted proposition: stored and referenceable, never truth-evaluated.
struct PropDecl {
  std::string name;
  Expr expr;
  SourceLoc loc;
};

struct CoeventDecl {
  enum class Form { Point, Support, Table, Zero };
  std::string name;
  Form form = Form::Zero;
  std::string point_outcome;        // Point
  std::vector<std::string> support; // Support
  std::string table_bits;           // Table
  SourceLoc loc;
};

struct AssertStmt {
  enum class Form { Apply, EventEq };
  Form form = Form::Apply;
  // Apply: coevent(arg) == expected
  std::string coevent;
  std::optional<Expr> arg;
  bool expected = false;
  // EventEq: lhs == rhs
  std::optional<Expr> lhs;
  std::optional<Expr> rhs;
  SourceLoc loc;
};

struct QueryStmt {
  enum class Form { Corner, Census, DenyAll, DenialCensus, Classify, Nagarjuna, Causation };
  Form form = Form::Causation;
  std::string coevent;                // Corner, DenyAll, Classify
  std::vector<Expr> args;             // event / cells
  std::optional<SchemeFilter> scheme; // Census, DenialCensus (absent = all)
  SchemeFilter universe = SchemeFilter::All; // Nagarjuna
  SchemeFilter scheme2 = SchemeFilter::All;  // Nagarjuna
  SourceLoc loc;
};

using Stmt = std::variant<SpaceDecl, EventDecl, PropDecl, CoeventDecl, AssertStmt, QueryStmt>;

struct Script {
  std::vector<Stmt> statements;
};

// Structural equality that ignores source locations.
bool ast_equal(const Stmt& a, const Stmt& b);
bool ast_equal(const Script& a, const Script& b);

} // namespace koti::dsl
