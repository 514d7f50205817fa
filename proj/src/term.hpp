#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "sexpr.hpp"

namespace specforge {

class Term;
using Terms = std::vector<Term>;

enum class TermKind { Var, Quote, App, LambdaApp };

// Translated, macro-free core form. Function and variable namespaces are
// disjoint: a symbol in head position names a function, a symbol in
// argument position is a variable.
class Term {
public:
  Term() = default;  // empty; only valid after assignment

  static Term var(const Symbol& name);
  static Term quote(const SExpr& value);
  static Term app(const Symbol& fn, Terms args);
  static Term lambda_app(std::vector<Symbol> params, Term body, Terms args);

  TermKind kind() const;
  bool valid() const { return node_ != nullptr; }

  const Symbol& var_name() const;
  const SExpr& quoted() const;
  const Symbol& fn() const;
  const Terms& args() const;                // App
  const std::vector<Symbol>& params() const;  // LambdaApp
  const Term& body() const;                   // LambdaApp
  const Terms& lambda_args() const;           // LambdaApp

  bool operator==(const Term& o) const;
  bool operator!=(const Term& o) const { return !(*this == o); }

private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Free variables in depth-first, left-to-right, first-occurrence order.
std::vector<Symbol> free_vars(const Term& t);

// Function names occurring in head position anywhere in t.
std::vector<Symbol> fns_called(const Term& t);
bool mentions_fn(const Term& t, const Symbol& fn);

// Every symbol occurring anywhere: variables, heads, lambda parameters,
// and symbols inside quoted constants.
void collect_symbols(const Term& t, std::vector<Symbol>& out);

// The raw macro-free surface form (no display sugar).
SExpr term_to_sexpr(const Term& t);

// Structural equality up to a consistent renaming of variables.
bool alpha_equal(const Term& a, const Term& b);

}  // namespace specforge
