#pragma once

#include <map>

#include "subst.hpp"
#include "term.hpp"
#include "world.hpp"

namespace specforge {

using Env = std::map<Symbol, SExpr>;

// Abstract function -> concrete function (or argument-adding lambda);
// extra lambda variables are looked up in the top-level environment.
using FnBind = std::map<Symbol, SubstTarget>;

// Call-by-value evaluation; IF takes a single branch; each defined-function
// unfolding consumes one fuel unit. CAR/CDR of an atom yield NIL; + treats
// non-integers as 0. Throws EvalError on fuel exhaustion, abstract calls
// and unbound variables.
SExpr eval_term(const World& w, const Term& t, const Env& env, long fuel);

// As eval_term, but calls to abstract functions are redirected through
// `fnbind`. The test oracle for instantiation equivalence.
SExpr eval_with_bindings(const World& w, const Term& t, const Env& env,
                         const FnBind& fnbind, long fuel);

}  // namespace specforge
