#pragma once

#include <string_view>

#include "koti/dsl/ast.hpp"

namespace koti::dsl {

// Parses a whole script. Throws ScriptError (LexError, ParseError,
// DuplicateName, UseBeforeDecl) with a 1-based line:column position.
Script parse(std::string_view source);

} // namespace koti::dsl
