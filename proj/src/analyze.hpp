#pragma once

#include <string>
#include <vector>

#include "world.hpp"

namespace specforge {

// All non-root defined functions at ordinal < upto whose bodies call a
// root or an already-discovered function, directly or transitively.
// Fixpoint over the stored macro-free bodies; result in world order.
std::vector<Symbol> derived_funs(const World& w,
                                 const std::vector<Symbol>& roots,
                                 std::size_t upto);

// All theorems at ordinal < upto whose formula or class attributes call
// any of `fns`; single pass, world order.
std::vector<Symbol> derived_thms(const World& w,
                                 const std::vector<Symbol>& fns,
                                 std::size_t upto);

// DOT digraph of caller -> callee edges restricted to roots plus their
// derived functions; deterministic node order.
std::string dep_graph_dot(const World& w, const std::vector<Symbol>& roots);

}  // namespace specforge
