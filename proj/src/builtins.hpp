#pragma once

#include <optional>

#include "sexpr.hpp"

namespace specforge {

// Fixed builtin function set. IF is listed for arity checking but is the
// one special form: evaluation takes a single branch.
bool is_builtin_fn(const Symbol& name);
std::optional<int> builtin_arity(const Symbol& name);

// Builtin macro heads eliminated by translation.
bool is_builtin_macro(const Symbol& name);

}  // namespace specforge
