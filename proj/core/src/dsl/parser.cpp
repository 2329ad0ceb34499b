#include <unordered_map>

#include "koti/dsl/parse.hpp"
#include "lexer.hpp"

namespace koti::dsl {

namespace {

enum class NameKind { Space, Outcome, Event, Prop, Coevent };

std::string_view describe(NameKind kind) {
  switch (kind) {
    case NameKind::Space: return "a space";
    case NameKind::Outcome: return "an outcome";
    case NameKind::Event: return "an event";
    case NameKind::Prop: return "a prop";
    case NameKind::Coevent: return "a coevent";
  }
  return "a name";
}

class Parser {
public:
  explicit Parser(std::string_view source) : tokens_(lex(source)) {}

  Script run() {
    Script script;
    while (!check(TokenKind::End)) script.statements.push_back(parse_stmt());
    return script;
  }

private:
  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }

  const Token& advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  bool check(TokenKind kind) const { return peek().kind == kind; }

  bool check_word(std::string_view word) const {
    return peek().kind == TokenKind::Word && peek().text == word;
  }

  bool match(TokenKind kind) {
    if (!check(kind)) return false;
    advance();
    return true;
  }

  [[noreturn]] void fail(ErrorKind kind, const Token& at, const std::string& message) const {
    throw ScriptError(kind, at.loc, message);
  }

  std::string shown(const Token& t) const {
    if (t.kind == TokenKind::End) return "end of input";
    if (t.kind == TokenKind::BitString) return "\"" + t.text + "\"";
    return "'" + t.text + "'";
  }

  [[noreturn]] void unexpected(const std::string& expected) const {
    fail(ErrorKind::ParseError, peek(), "unexpected " + shown(peek()) + ", expected " + expected);
  }

  const Token& expect(TokenKind kind, const std::string& expected) {
    if (!check(kind)) unexpected(expected);
    return advance();
  }

  void expect_word(std::string_view word) {
    if (!check_word(word)) unexpected("'" + std::string(word) + "'");
    advance();
  }

  // An identifier in declaration or reference position; keywords are reserved.
  Token expect_ident(const std::string& what) {
    if (!check(TokenKind::Word)) unexpected(what);
    if (is_keyword(peek().text))
      fail(ErrorKind::ParseError, peek(),
           "keyword '" + peek().text + "' cannot be used as " + what);
    return advance();
  }

  void declare(const Token& name, NameKind kind) {
    auto [it, inserted] = names_.emplace(name.text, kind);
    if (!inserted)
      fail(ErrorKind::DuplicateName, name, "duplicate name \"" + name.text + "\"");
  }

  NameKind resolve(const Token& name, NameKind want, const std::string& context) {
    auto it = names_.find(name.text);
    if (it == names_.end())
      fail(ErrorKind::UseBeforeDecl, name,
           "\"" + name.text + "\" is not declared at this point");
    if (it->second != want) {
      // Referencing an event where a prop works (and vice versa) is fine.
      const bool value_like = (it->second == NameKind::Event || it->second == NameKind::Prop) &&
                              (want == NameKind::Event || want == NameKind::Prop);
      if (!value_like) {
        std::string hint;
        if (it->second == NameKind::Outcome && (want == NameKind::Event || want == NameKind::Prop))
          hint = "; write {" + name.text + "} for the singleton event";
        fail(ErrorKind::ParseError, name,
             "\"" + name.text + "\" names " + std::string(describe(it->second)) + ", expected " +
                 context + hint);
      }
    }
    return it->second;
  }

  void require_space(const Token& at) {
    if (!has_space_)
      fail(ErrorKind::UseBeforeDecl, at, "no space declared yet; start with a space statement");
  }

  Stmt parse_stmt() {
    if (!check(TokenKind::Word)) unexpected("a statement keyword");
    const std::string head = peek().text;
    if (head == "space") return parse_space();
    if (head == "event") return parse_event_decl();
    if (head == "prop") return parse_prop_decl();
    if (head == "coevent") return parse_coevent_decl();
    if (head == "assert") return parse_assert();
    if (head == "query") return parse_query();
    unexpected("one of 'space', 'event', 'prop', 'coevent', 'assert', 'query'");
  }

  Stmt parse_space() {
    const Token& kw = advance();
    if (has_space_)
      fail(ErrorKind::ParseError, kw, "a script declares exactly one space");
    SpaceDecl decl;
    decl.loc = kw.loc;
    Token name = expect_ident("a space name");
    decl.name = name.text;
    declare(name, NameKind::Space);
    expect(TokenKind::Equal, "'='");
    expect(TokenKind::LBrace, "'{'");
    for (;;) {
      Token outcome = expect_ident("an outcome name");
      declare(outcome, NameKind::Outcome);
      decl.outcomes.push_back(outcome.text);
      if (match(TokenKind::Comma)) continue;
      break;
    }
    expect(TokenKind::RBrace, "',' or '}'");
    expect(TokenKind::Semicolon, "';'");
    has_space_ = true;
    return decl;
  }

  Stmt parse_event_decl() {
    const Token& kw = advance();
    require_space(kw);
    EventDecl decl{"", Expr::zero(), kw.loc};
    Token name = expect_ident("an event name");
    decl.name = name.text;
    expect(TokenKind::Equal, "'='");
    decl.expr = parse_expr();
    expect(TokenKind::Semicolon, "';'");
    declare(name, NameKind::Event);
    return decl;
  }

  Stmt parse_prop_decl() {
    const Token& kw = advance();
    require_space(kw);
    PropDecl decl{"", Expr::zero(), kw.loc};
    Token name = expect_ident("a prop name");
    decl.name = name.text;
    expect(TokenKind::Equal, "'='");
    decl.expr = parse_expr();
    expect(TokenKind::Semicolon, "';'");
    declare(name, NameKind::Prop);
    return decl;
  }

  Stmt parse_coevent_decl() {
    const Token& kw = advance();
    require_space(kw);
    CoeventDecl decl;
    decl.loc = kw.loc;
    Token name = expect_ident("a coevent name");
    decl.name = name.text;
    expect(TokenKind::Equal, "'='");
    if (check_word("point")) {
      advance();
      decl.form = CoeventDecl::Form::Point;
      Token outcome = expect_ident("an outcome name");
      resolve(outcome, NameKind::Outcome, "an outcome");
      decl.point_outcome = outcome.text;
    } else if (check_word("support")) {
      advance();
      decl.form = CoeventDecl::Form::Support;
      expect(TokenKind::LBrace, "'{'");
      for (;;) {
        Token outcome = expect_ident("an outcome name");
        resolve(outcome, NameKind::Outcome, "an outcome");
        decl.support.push_back(outcome.text);
        if (match(TokenKind::Comma)) continue;
        break;
      }
      expect(TokenKind::RBrace, "',' or '}'");
    } else if (check_word("table")) {
      advance();
      decl.form = CoeventDecl::Form::Table;
      const Token& bits = expect(TokenKind::BitString, "a quoted bit string");
      decl.table_bits = bits.text;
    } else if (check_word("zero")) {
      advance();
      decl.form = CoeventDecl::Form::Zero;
    } else {
      unexpected("'point', 'support', 'table' or 'zero'");
    }
    expect(TokenKind::Semicolon, "';'");
    declare(name, NameKind::Coevent);
    return decl;
  }

  Stmt parse_assert() {
    const Token& kw = advance();
    require_space(kw);
    AssertStmt stmt;
    stmt.loc = kw.loc;
    // `assert name(...)` applies a coevent; everything else compares events.
    if (check(TokenKind::Word) && !is_keyword(peek().text) && peek(1).kind == TokenKind::LParen) {
      stmt.form = AssertStmt::Form::Apply;
      Token name = advance();
      resolve(name, NameKind::Coevent, "a coevent");
      stmt.coevent = name.text;
      expect(TokenKind::LParen, "'('");
      stmt.arg = parse_expr();
      expect(TokenKind::RParen, "')'");
      expect(TokenKind::EqualEqual, "'=='");
      stmt.expected = parse_bit();
    } else {
      stmt.form = AssertStmt::Form::EventEq;
      stmt.lhs = parse_expr();
      expect(TokenKind::EqualEqual, "'=='");
      stmt.rhs = parse_expr();
    }
    expect(TokenKind::Semicolon, "';'");
    return stmt;
  }

  bool parse_bit() {
    if (!check(TokenKind::Number)) unexpected("'0' or '1'");
    const Token& t = advance();
    if (t.text == "0") return false;
    if (t.text == "1") return true;
    fail(ErrorKind::ParseError, t, "expected '0' or '1', got '" + t.text + "'");
  }

  SchemeFilter parse_scheme() {
    if (check(TokenKind::Word)) {
      if (auto scheme = scheme_from_string(peek().text)) {
        advance();
        return *scheme;
      }
    }
    unexpected("'all', 'multiplicative' or 'homomorphic'");
  }

  Stmt parse_query() {
    const Token& kw = advance();
    QueryStmt stmt;
    stmt.loc = kw.loc;
    if (!check(TokenKind::Word)) unexpected("a query form");
    const std::string head = peek().text;

    if (head == "causation") {
      advance();
      stmt.form = QueryStmt::Form::Causation;
      expect(TokenKind::Semicolon, "';'");
      return stmt;
    }

    require_space(peek());
    if (head == "corner") {
      advance();
      stmt.form = QueryStmt::Form::Corner;
      expect(TokenKind::LParen, "'('");
      Token name = expect_ident("a coevent name");
      resolve(name, NameKind::Coevent, "a coevent");
      stmt.coevent = name.text;
      expect(TokenKind::Comma, "','");
      stmt.args.push_back(parse_expr());
      expect(TokenKind::RParen, "')'");
    } else if (head == "census") {
      advance();
      stmt.form = QueryStmt::Form::Census;
      expect(TokenKind::LParen, "'('");
      stmt.args.push_back(parse_expr());
      expect(TokenKind::RParen, "')'");
      if (check_word("scheme")) {
        advance();
        stmt.scheme = parse_scheme();
      }
    } else if (head == "deny_all") {
      advance();
      stmt.form = QueryStmt::Form::DenyAll;
      expect(TokenKind::LParen, "'('");
      Token name = expect_ident("a coevent name");
      resolve(name, NameKind::Coevent, "a coevent");
      stmt.coevent = name.text;
      expect(TokenKind::Comma, "','");
      stmt.args = parse_expr_list();
      expect(TokenKind::RParen, "')'");
    } else if (head == "denial_census") {
      advance();
      stmt.form = QueryStmt::Form::DenialCensus;
      expect(TokenKind::LParen, "'('");
      stmt.args = parse_expr_list();
      expect(TokenKind::RParen, "')'");
      if (check_word("scheme")) {
        advance();
        stmt.scheme = parse_scheme();
      }
    } else if (head == "classify") {
      advance();
      stmt.form = QueryStmt::Form::Classify;
      expect(TokenKind::LParen, "'('");
      Token name = expect_ident("a coevent name");
      resolve(name, NameKind::Coevent, "a coevent");
      stmt.coevent = name.text;
      expect(TokenKind::RParen, "')'");
    } else if (head == "nagarjuna") {
      advance();
      stmt.form = QueryStmt::Form::Nagarjuna;
      expect(TokenKind::LParen, "'('");
      stmt.args.push_back(parse_expr());
      expect(TokenKind::RParen, "')'");
      expect_word("universe");
      stmt.universe = parse_scheme();
      expect_word("scheme2");
      stmt.scheme2 = parse_scheme();
    } else {
      unexpected("one of 'corner', 'census', 'deny_all', 'denial_census', 'classify', "
                 "'nagarjuna', 'causation'");
    }
    expect(TokenKind::Semicolon, "';'");
    return stmt;
  }

  std::vector<Expr> parse_expr_list() {
    std::vector<Expr> exprs;
    exprs.push_back(parse_expr());
    while (match(TokenKind::Comma)) exprs.push_back(parse_expr());
    return exprs;
  }

  Expr parse_expr() {
    Expr lhs = parse_term();
    while (match(TokenKind::Pipe)) lhs = Expr::disj(std::move(lhs), parse_term());
    return lhs;
  }

  Expr parse_term() {
    Expr lhs = parse_factor();
    while (match(TokenKind::Amp)) lhs = Expr::conj(std::move(lhs), parse_factor());
    return lhs;
  }

  Expr parse_factor() {
    if (match(TokenKind::Bang)) return Expr::negate(parse_factor());
    if (match(TokenKind::LParen)) {
      Expr inner = parse_expr();
      expect(TokenKind::RParen, "')'");
      return inner;
    }
    if (check(TokenKind::LBrace)) return parse_set_lit();
    if (check(TokenKind::Number)) {
      const Token& t = advance();
      if (t.text == "0") return Expr::zero();
      if (t.text == "1") return Expr::one();
      fail(ErrorKind::ParseError, t, "expected '0' or '1', got '" + t.text + "'");
    }
    if (check(TokenKind::Word) && !is_keyword(peek().text)) {
      Token name = advance();
      resolve(name, NameKind::Event, "an event or prop");
      return Expr::ref(name.text);
    }
    unexpected("an expression");
  }

  Expr parse_set_lit() {
    expect(TokenKind::LBrace, "'{'");
    std::vector<std::string> members;
    if (!check(TokenKind::RBrace)) {
      for (;;) {
        Token outcome = expect_ident("an outcome name");
        resolve(outcome, NameKind::Outcome, "an outcome");
        members.push_back(outcome.text);
        if (match(TokenKind::Comma)) continue;
        break;
      }
    }
    expect(TokenKind::RBrace, "',' or '}'");
    return Expr::set_lit(std::move(members));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::unordered_map<std::string, NameKind> names_;
  bool has_space_ = false;
};

} // namespace

Script parse(std::string_view source) { return Parser(source).run(); }

} // namespace koti::dsl
