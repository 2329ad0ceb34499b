#include "lexer.hpp"

#include <array>
#include <cctype>

namespace koti::dsl {

bool is_keyword(std::string_view word) {
  static constexpr std::array keywords = {
      "space",  "event",        "prop",     "coevent",  "assert",        "query",
      "point",  "support",      "table",    "zero",     "corner",        "census",
      "deny_all", "denial_census", "classify", "nagarjuna", "causation", "universe",
      "scheme", "scheme2",      "all",      "multiplicative", "homomorphic",
  };
  for (const char* k : keywords)
    if (word == k) return true;
  return false;
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

class Lexer {
public:
  explicit Lexer(std::string_view source) : src_(source) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    for (;;) {
      skip_trivia();
      if (at_end()) {
        tokens.push_back(Token{TokenKind::End, "", here(), 0});
        return tokens;
      }
      tokens.push_back(next_token());
    }
  }

private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }

  SourceLoc here() const { return SourceLoc{line_, col_, pos_}; }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_trivia() {
    while (!at_end()) {
      const char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        return;
      }
    }
  }

  [[noreturn]] void fail(SourceLoc loc, const std::string& message) const {
    throw ScriptError(ErrorKind::LexError, loc, message);
  }

  Token next_token() {
    const SourceLoc start = here();
    const char c = peek();

    if (is_ident_start(c)) {
      std::string word;
      while (!at_end() && is_ident_char(peek())) {
        word.push_back(peek());
        advance();
      }
      return Token{TokenKind::Word, std::move(word), start, pos_ - start.offset};
    }

    if (is_digit(c)) {
      std::string digits;
      while (!at_end() && is_digit(peek())) {
        digits.push_back(peek());
        advance();
      }
      return Token{TokenKind::Number, std::move(digits), start, pos_ - start.offset};
    }

    if (c == '"') {
      advance();
      std::string bits;
      for (;;) {
        if (at_end() || peek() == '\n') fail(start, "unterminated bit string");
        const char b = peek();
        if (b == '"') {
          advance();
          break;
        }
        if (b != '0' && b != '1')
          fail(here(), std::string("bit string may contain only 0 and 1, got '") + b + "'");
        bits.push_back(b);
        advance();
      }
      return Token{TokenKind::BitString, std::move(bits), start, pos_ - start.offset};
    }

    advance();
    switch (c) {
      case '{': return Token{TokenKind::LBrace, "{", start, 1};
      case '}': return Token{TokenKind::RBrace, "}", start, 1};
      case '(': return Token{TokenKind::LParen, "(", start, 1};
      case ')': return Token{TokenKind::RParen, ")", start, 1};
      case ',': return Token{TokenKind::Comma, ",", start, 1};
      case ';': return Token{TokenKind::Semicolon, ";", start, 1};
      case '!': return Token{TokenKind::Bang, "!", start, 1};
      case '&': return Token{TokenKind::Amp, "&", start, 1};
      case '|': return Token{TokenKind::Pipe, "|", start, 1};
      case '=':
        if (!at_end() && peek() == '=') {
          advance();
          return Token{TokenKind::EqualEqual, "==", start, 2};
        }
        return Token{TokenKind::Equal, "=", start, 1};
      default:
        fail(start, std::string("unexpected character '") + c + "'");
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

} // namespace

std::vector<Token> lex(std::string_view source) { return Lexer(source).run(); }

} // namespace koti::dsl
