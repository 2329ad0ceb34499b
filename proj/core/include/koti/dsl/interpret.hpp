#pragma once

#include "koti/dsl/ast.hpp"
#include "koti/report.hpp"

namespace koti::dsl {

struct ExecOptions {
  Capacity caps;
  unsigned jobs = 1;
};

// Runs statements in order. Failed asserts are recorded, not fatal; capacity
// and domain errors abort with the offending statement's location attached.
Report execute(const Script& script, const ExecOptions& options = {});

} // namespace koti::dsl
