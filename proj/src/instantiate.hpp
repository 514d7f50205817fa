#pragma once

#include <optional>
#include <vector>

#include "world.hpp"

namespace specforge {

// A rename list as written: pairs (old new), lambda pairs, or singleton
// skip entries; lambda bodies still raw.
struct RawRenameEntry {
  Symbol old_name;
  enum class Kind { Name, Lambda, Skip } kind;
  Symbol target;                     // Name
  std::vector<Symbol> lambda_params; // Lambda
  SExpr lambda_body;                 // Lambda, untranslated
};

struct RawRename {
  std::vector<RawRenameEntry> entries;
  const RawRenameEntry* find(const Symbol& old_name) const;
};

// Parses a rename argument: NIL, a quoted list of entries, or the name of
// a defconst holding one.
RawRename parse_rename(const World& w, const SExpr& arg);

// A total substitution over the spec functions, their derived functions
// and derived theorems: explicit entries win, unmapped names get
// PREFIX-NAME. Spec-function targets must exist with matching arity;
// derived and theorem targets must be fresh; Skip only for theorems.
FnSubst build_substitution(const World& w, const Symbol& spec,
                           const Symbol& prefix, const RawRename& rename,
                           Report* report = nullptr);

// constraints_of(spec) with the spec functions replaced per subst: the
// formulas an instance must satisfy.
std::vector<Term> definstance_obligations(const World& w, const Symbol& spec,
                                          const FnSubst& subst);

// The full pipeline: discharge obligations and admit an instance record,
// copy every derived function, copy every non-skipped derived theorem with
// a justification attached.
World instance_of_defspec(const World& w, const Symbol& spec,
                          const Symbol& prefix, const SExpr& rename_arg,
                          const AdmitOptions& opts);

Symbol prefixed(const Symbol& prefix, const Symbol& name);

}  // namespace specforge
