#pragma once

#include <vector>

#include "sexpr.hpp"

namespace specforge {

// Finite test domain and step budget for bounded-exhaustive checking.
struct Universe {
  std::vector<SExpr> values;
  long fuel = 10000;
};

// {NIL, T, A, B, 0, 1, 2, -1, (A), (A B), (0 1), (A . B)}: integers for
// arithmetic witnesses, proper and improper lists for folds, distinct
// atoms for commutativity counterexamples.
const Universe& default_universe();

}  // namespace specforge
