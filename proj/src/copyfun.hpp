#pragma once

#include "subst.hpp"
#include "world.hpp"

namespace specforge {

struct CopyResult {
  DefUnEv def;
  std::vector<Symbol> extras;
};

// Copies `old` under `subst` as `new_name`: heads rewritten, lambda targets
// spliced with their parameters bound to the rewritten arguments, extra
// lambda variables appended as trailing formals, recursive calls passing
// them through unchanged.
CopyResult copy_function(const World& w, const DefUnEv& old,
                         const FnSubst& subst, const Symbol& new_name,
                         const ExtrasMap& extras_of = {});

}  // namespace specforge
