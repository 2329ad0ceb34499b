#include "koti/dsl/format.hpp"

#include <sstream>

namespace koti::dsl {

namespace {

// Precedence levels: | is 1, & is 2, ! is 3, atoms bind tightest.
void print_expr(std::ostream& out, const Expr& e, int parent) {
  switch (e.kind()) {
    case Expr::Kind::Or: {
      const bool parens = parent > 1;
      if (parens) out << '(';
      print_expr(out, e.left(), 1);
      out << " | ";
      print_expr(out, e.right(), 2);
      if (parens) out << ')';
      return;
    }
    case Expr::Kind::And: {
      const bool parens = parent > 2;
      if (parens) out << '(';
      print_expr(out, e.left(), 2);
      out << " & ";
      print_expr(out, e.right(), 3);
      if (parens) out << ')';
      return;
    }
    case Expr::Kind::Not: {
      const bool parens = parent >= 2;
      if (parens) out << '(';
      out << '!';
      print_expr(out, e.child(), 3);
      if (parens) out << ')';
      return;
    }
    case Expr::Kind::Ref:
      out << e.name();
      return;
    case Expr::Kind::SetLit: {
      out << '{';
      for (std::size_t i = 0; i < e.members().size(); ++i) {
        if (i) out << ", ";
        out << e.members()[i];
      }
      out << '}';
      return;
    }
    case Expr::Kind::Zero:
      out << '0';
      return;
    case Expr::Kind::One:
      out << '1';
      return;
  }
}

void print_names(std::ostream& out, const std::vector<std::string>& names) {
  out << '{';
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out << ", ";
    out << names[i];
  }
  out << '}';
}

struct StmtPrinter {
  std::ostream& out;

  void operator()(const SpaceDecl& s) {
    out << "space " << s.name << " = ";
    print_names(out, s.outcomes);
    out << ';';
  }

  void operator()(const EventDecl& s) {
    out << "event " << s.name << " = ";
    print_expr(out, s.expr, 0);
    out << ';';
  }

  void operator()(const PropDecl& s) {
    out << "prop " << s.name << " = ";
    print_expr(out, s.expr, 0);
    out << ';';
  }

  void operator()(const CoeventDecl& s) {
    out << "coevent " << s.name << " = ";
    switch (s.form) {
      case CoeventDecl::Form::Point: out << "point " << s.point_outcome; break;
      case CoeventDecl::Form::Support:
        out << "support ";
        print_names(out, s.support);
        break;
      case CoeventDecl::Form::Table: out << "table \"" << s.table_bits << '"'; break;
      case CoeventDecl::Form::Zero: out << "zero"; break;
    }
    out << ';';
  }

  void operator()(const AssertStmt& s) {
    out << "assert ";
    if (s.form == AssertStmt::Form::Apply) {
      out << s.coevent << '(';
      print_expr(out, *s.arg, 0);
      out << ") == " << (s.expected ? '1' : '0');
    } else {
      print_expr(out, *s.lhs, 0);
      out << " == ";
      print_expr(out, *s.rhs, 0);
    }
    out << ';';
  }

  void operator()(const QueryStmt& s) {
    out << "query ";
    switch (s.form) {
      case QueryStmt::Form::Corner:
        out << "corner(" << s.coevent << ", ";
        print_expr(out, s.args[0], 0);
        out << ')';
        break;
      case QueryStmt::Form::Census:
        out << "census(";
        print_expr(out, s.args[0], 0);
        out << ')';
        if (s.scheme) out << " scheme " << to_string(*s.scheme);
        break;
      case QueryStmt::Form::DenyAll:
        out << "deny_all(" << s.coevent;
        for (const Expr& e : s.args) {
          out << ", ";
          print_expr(out, e, 0);
        }
        out << ')';
        break;
      case QueryStmt::Form::DenialCensus: {
        out << "denial_census(";
        for (std::size_t i = 0; i < s.args.size(); ++i) {
          if (i) out << ", ";
          print_expr(out, s.args[i], 0);
        }
        out << ')';
        if (s.scheme) out << " scheme " << to_string(*s.scheme);
        break;
      }
      case QueryStmt::Form::Classify:
        out << "classify(" << s.coevent << ')';
        break;
      case QueryStmt::Form::Nagarjuna:
        out << "nagarjuna(";
        print_expr(out, s.args[0], 0);
        out << ") universe " << to_string(s.universe) << " scheme2 " << to_string(s.scheme2);
        break;
      case QueryStmt::Form::Causation:
        out << "causation";
        break;
    }
    out << ';';
  }
};

} // namespace

std::string format(const Expr& expr) {
  std::ostringstream out;
  print_expr(out, expr, 0);
  return out.str();
}

std::string format(const Stmt& stmt) {
  std::ostringstream out;
  std::visit(StmtPrinter{out}, stmt);
  return out.str();
}

std::string format(const Script& script) {
  std::ostringstream out;
  for (const Stmt& stmt : script.statements) {
    std::visit(StmtPrinter{out}, stmt);
    out << '\n';
  }
  return out.str();
}

} // namespace koti::dsl
