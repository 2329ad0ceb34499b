#include "koti/dsl/ast.hpp"

namespace koti::dsl {

struct Expr::Node {
  Kind kind;
  std::string name;                 // Ref
  std::vector<std::string> members; // SetLit
  std::shared_ptr<const Node> child;
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;
};

Expr Expr::ref(std::string name) {
  return Expr(std::make_shared<Node>(Node{Kind::Ref, std::move(name), {}, {}, {}, {}}));
}

Expr Expr::set_lit(std::vector<std::string> members) {
  return Expr(std::make_shared<Node>(Node{Kind::SetLit, {}, std::move(members), {}, {}, {}}));
}

Expr Expr::negate(Expr inner) {
  return Expr(std::make_shared<Node>(Node{Kind::Not, {}, {}, std::move(inner.node_), {}, {}}));
}

Expr Expr::conj(Expr left, Expr right) {
  return Expr(std::make_shared<Node>(
      Node{Kind::And, {}, {}, {}, std::move(left.node_), std::move(right.node_)}));
}

Expr Expr::disj(Expr left, Expr right) {
  return Expr(std::make_shared<Node>(
      Node{Kind::Or, {}, {}, {}, std::move(left.node_), std::move(right.node_)}));
}

Expr Expr::zero() { return Expr(std::make_shared<Node>(Node{Kind::Zero, {}, {}, {}, {}, {}})); }
Expr Expr::one() { return Expr(std::make_shared<Node>(Node{Kind::One, {}, {}, {}, {}, {}})); }

Expr::Kind Expr::kind() const { return node_->kind; }
const std::string& Expr::name() const { return node_->name; }
const std::vector<std::string>& Expr::members() const { return node_->members; }
Expr Expr::child() const { return Expr(node_->child); }
Expr Expr::left() const { return Expr(node_->left); }
Expr Expr::right() const { return Expr(node_->right); }

bool Expr::operator==(const Expr& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::Ref: return name() == other.name();
    case Kind::SetLit: return members() == other.members();
    case Kind::Not: return child() == other.child();
    case Kind::And:
    case Kind::Or: return left() == other.left() && right() == other.right();
    case Kind::Zero:
    case Kind::One: return true;
  }
  return false;
}

namespace {

bool stmt_equal(const SpaceDecl& a, const SpaceDecl& b) {
  return a.name == b.name && a.outcomes == b.outcomes;
}

bool stmt_equal(const EventDecl& a, const EventDecl& b) {
  return a.name == b.name && a.expr == b.expr;
}

bool stmt_equal(const PropDecl& a, const PropDecl& b) {
  return a.name == b.name && a.expr == b.expr;
}

bool stmt_equal(const CoeventDecl& a, const CoeventDecl& b) {
  return a.name == b.name && a.form == b.form && a.point_outcome == b.point_outcome &&
         a.support == b.support && a.table_bits == b.table_bits;
}

bool stmt_equal(const AssertStmt& a, const AssertStmt& b) {
  return a.form == b.form && a.coevent == b.coevent && a.arg == b.arg &&
         a.expected == b.expected && a.lhs == b.lhs && a.rhs == b.rhs;
}

bool stmt_equal(const QueryStmt& a, const QueryStmt& b) {
  return a.form == b.form && a.coevent == b.coevent && a.args == b.args &&
         a.scheme == b.scheme && a.universe == b.universe && a.scheme2 == b.scheme2;
}

} // namespace

bool ast_equal(const Stmt& a, const Stmt& b) {
  if (a.index() != b.index()) return false;
  return std::visit(
      [&b](const auto& lhs) {
        using T = std::decay_t<decltype(lhs)>;
        return stmt_equal(lhs, std::get<T>(b));
      },
      a);
}

bool ast_equal(const Script& a, const Script& b) {
  if (a.statements.size() != b.statements.size()) return false;
  for (std::size_t i = 0; i < a.statements.size(); ++i)
    if (!ast_equal(a.statements[i], b.statements[i])) return false;
  return true;
}

} // namespace koti::dsl
