#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sexpr.hpp"

namespace specforge {

struct ReadForm {
  SExpr form;
  int line = 1;
  int col = 1;
};

// Parses a sequence of s-expressions. Quote sugar 'X reads as (QUOTE X);
// dotted pairs allowed; `;` starts a line comment; symbols are upper-cased.
// Throws ParseError with line/column on malformed input.
std::vector<SExpr> read_all(std::string_view text);
std::vector<ReadForm> read_all_pos(std::string_view text);

// Single datum convenience; errors unless exactly one form is present.
SExpr read_one(std::string_view text);

// True when the text contains no unclosed parenthesis (comment-aware).
// Used by the REPL to decide whether to keep accumulating lines.
bool input_complete(std::string_view text);

}  // namespace specforge
