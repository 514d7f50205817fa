#pragma once

#include <string>
#include <vector>

#include "term.hpp"
#include "universe.hpp"
#include "world.hpp"

namespace specforge {

// Outcome of bounded-exhaustive checking.
struct Verdict {
  enum class Kind { Pass, Fail, Unknown };
  Kind kind = Kind::Pass;
  // Fail: assigns every free variable of the checked formula.
  std::vector<std::pair<Symbol, SExpr>> counterexample;
  // Unknown: "fuel-exhausted" or "abstract-function".
  std::string reason;

  bool pass() const { return kind == Kind::Pass; }
  bool fail() const { return kind == Kind::Fail; }
};

std::string format_binding(const std::vector<std::pair<Symbol, SExpr>>& b);

// Enumerates all assignments of universe values to the formula's free
// variables (variables alphabetical, values in universe order, rightmost
// variable varies fastest). Pass iff every assignment evaluates non-NIL;
// the first failing assignment is reported; evaluation errors become
// Unknown.
Verdict check_formula(const World& w, const Term& formula, const Universe& u);

// How one obligation was discharged.
struct Discharge {
  enum class Method { ByTheorem, ByCheck };
  Method method;
  Symbol theorem;  // ByTheorem: the matching theorem name
};

// Discharges each obligation by the first applicable method: an admitted
// theorem alpha-equal to it, else a bounded check when all functions are
// executable. Throws an admission error otherwise.
std::vector<Discharge> discharge(const World& w,
                                 const std::vector<Term>& obligations,
                                 const Universe& u);

}  // namespace specforge
