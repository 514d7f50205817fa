#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bigint.hpp"

namespace specforge {

// Symbol names are plain upper-case strings; the reader normalizes case.
using Symbol = std::string;

// Symbolic datum: symbol, integer, or dotted pair. Values are immutable
// and share structure freely; copying is cheap.
class SExpr {
public:
  SExpr();  // NIL

  static SExpr symbol(const Symbol& name);
  static SExpr integer(BigInt value);
  static SExpr integer(long long value);
  static SExpr cons(const SExpr& head, const SExpr& tail);
  static SExpr nil();
  static SExpr truth();
  static SExpr list(const std::vector<SExpr>& elems);

  bool is_symbol() const;
  bool is_integer() const;
  bool is_pair() const;
  bool is_atom() const { return !is_pair(); }
  bool is_nil() const { return is_symbol() && sym() == "NIL"; }
  bool truthy() const { return !is_nil(); }
  bool is_sym(const char* name) const { return is_symbol() && sym() == name; }

  const Symbol& sym() const;
  const BigInt& num() const;
  const SExpr& head() const;
  const SExpr& tail() const;

  bool operator==(const SExpr& o) const;
  bool operator!=(const SExpr& o) const { return !(*this == o); }

  // Elements of a proper list, or nullopt if improper / not a list.
  // NIL yields the empty vector.
  std::optional<std::vector<SExpr>> proper() const;

private:
  struct Node;
  explicit SExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Canonical printing: upper case, list notation, quote sugar for
// (QUOTE x), dotted tail only when the final tail is a non-NIL atom.
std::string show(const SExpr& v);

}  // namespace specforge
