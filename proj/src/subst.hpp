#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "term.hpp"

namespace specforge {

class World;
struct DefUnEv;

struct NameTarget {
  Symbol name;
};

// Lambda target: same parameters as the function it replaces; free
// variables beyond the parameters become trailing formals of every copy.
struct LambdaTarget {
  std::vector<Symbol> params;
  Term body;
};

// A singleton rename entry: the named theorem is not copied at all.
struct SkipTarget {};

using SubstTarget = std::variant<NameTarget, LambdaTarget, SkipTarget>;

SExpr target_to_sexpr(const SubstTarget& t);

// Functional substitution: old name -> target, applied to function-head
// positions only. Old names are distinct; application is simultaneous.
struct FnSubst {
  std::vector<std::pair<Symbol, SubstTarget>> entries;

  const SubstTarget* find(const Symbol& old_name) const;
  void add(const Symbol& old_name, SubstTarget target);
  bool empty() const { return entries.empty(); }
};

// Head renaming on terms. Name targets only; symbols in variable position
// are never touched, and a replacement head is not substituted again
// (swaps work). Skip/Lambda entries here are an error.
Term replacefns(const FnSubst& subst, const Term& t);
Terms replacefns(const FnSubst& subst, const Terms& ts);

// Simultaneous variable substitution (beta step for lambda targets).
// Heads are never touched; inner lambda parameters shadow.
Term subst_vars(const Term& t, const std::map<Symbol, Term>& binding);

// Enforces the exact-formals rule for lambda targets; the error message
// names the lambda, its parameters and the expected formals.
void validate_lambda(const std::vector<Symbol>& old_formals,
                     const LambdaTarget& target);

// Extra formals already granted to previously copied functions, keyed by
// their old names; calls to them thread the extras through.
using ExtrasMap = std::map<Symbol, std::vector<Symbol>>;

// Shared head-rewriting machinery; also used to instantiate obligation
// formulas and rule-class attribute terms.
Term rewrite_under(const Term& t, const FnSubst& subst,
                   const ExtrasMap& extras_of);

}  // namespace specforge
