#pragma once

#include <string>

#include "koti/dsl/ast.hpp"

namespace koti::dsl {

// Canonical text: one statement per line, fixed spacing, deterministic
// parenthesization. parse(format(s)) reproduces s up to source locations.
std::string format(const Script& script);
std::string format(const Stmt& stmt);
std::string format(const Expr& expr);

} // namespace koti::dsl
