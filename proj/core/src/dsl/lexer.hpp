#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "koti/dsl/ast.hpp"

namespace koti::dsl {

enum class TokenKind {
  Word, // identifier or keyword
  Number,
  BitString, // quoted run of 0/1, text holds the bits without quotes
  LBrace,
  RBrace,
  LParen,
  RParen,
  Comma,
  Semicolon,
  Equal,
  EqualEqual,
  Bang,
  Amp,
  Pipe,
  End,
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  SourceLoc loc;
  std::size_t length = 0; // source span, quotes included
};

bool is_keyword(std::string_view word);

// Throws ScriptError(LexError) on bad input.
std::vector<Token> lex(std::string_view source);

} // namespace koti::dsl
