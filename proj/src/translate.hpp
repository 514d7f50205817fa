#pragma once

#include <map>

#include "term.hpp"
#include "world.hpp"

namespace specforge {

// Functions visible during translation beyond the world (the function
// being admitted, so recursive bodies resolve).
struct LocalFns {
  std::map<Symbol, std::size_t> arities;
};

// Surface form -> macro-free core term. Expands AND/OR/COND/LIST, quotes
// constants, checks arities and head definedness.
Term translate(const World& w, const SExpr& form,
               const LocalFns* locals = nullptr);

// Display form: (IF a b 'NIL) re-sugars to AND (right-flattened),
// (IF a a b) to OR, quotes drop from self-evaluating atoms.
// translate(untranslate(t)) == t.
SExpr untranslate(const Term& t);

// Structural term parse without world checks: heads stay as written,
// arities unchecked, macros not expanded. For the :replacefns query.
Term lenient_term(const SExpr& form);

// Branch normalization applied when displaying defining equations:
// (IF (ATOM x) a b) -> (IF (CONSP x) b a), (IF (NOT p) a b) -> (IF p b a).
Term normalize_for_display(const Term& t);

// (EQUAL (fn formals...) body), body display-normalized; what :pf prints
// for a defined function.
Term defining_equation(const World& w, const Symbol& fn);

}  // namespace specforge
