#pragma once

#include <optional>
#include <vector>

#include "world.hpp"

namespace specforge {

// Surface content of a defspec before admission. Local events are raw
// forms; they are checked in a scratch world and then hidden.
struct DefSpecInput {
  Symbol name;
  std::vector<Signature> sigs;
  std::vector<SExpr> body_forms;  // (local ...), (defthm ...), (is-a ...)
};

DefSpecInput parse_defspec(const SExpr& form);

// Admits a specification: witnesses are admitted into a scratch world and
// exported theorems bounded-checked against them; the visible world gains
// the spec record, its signature functions as abstract functions, and the
// exported theorems. Witness bodies never enter the visible world.
World admit_defspec(const World& w, const DefSpecInput& input,
                    const AdmitOptions& opts);

// Exported theorem formulas of the spec, in declaration order (including
// formulas contributed by is-a expansions inside its body).
std::vector<Term> constraints_of(const World& w, const Symbol& spec);

// Expands (is-a spec prefix base-name [rename]) against `scratch`: one
// theorem per constraint of `spec`, heads renamed (explicit entries win,
// PREFIX-NAME otherwise), named base-name-0, base-name-1, ...
std::vector<DefThmEv> is_a_expand(const World& scratch, const Symbol& spec,
                                  const Symbol& prefix,
                                  const Symbol& base_name,
                                  const FnSubst& rename);

}  // namespace specforge
