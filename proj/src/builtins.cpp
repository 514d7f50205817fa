#include "builtins.hpp"

#include <map>

namespace specforge {

namespace {
const std::map<Symbol, int>& table() {
  static const std::map<Symbol, int> t = {
      {"CONS", 2},  {"CAR", 1},      {"CDR", 1},          {"CONSP", 1},
      {"ATOM", 1},  {"ENDP", 1},     {"NULL", 1},         {"EQUAL", 2},
      {"NOT", 1},   {"IMPLIES", 2},  {"INTEGERP", 1},     {"+", 2},
      {"MEMBER-EQUAL", 2},           {"IF", 3},
  };
  return t;
}
}  // namespace

bool is_builtin_fn(const Symbol& name) { return table().count(name) > 0; }

std::optional<int> builtin_arity(const Symbol& name) {
  auto it = table().find(name);
  if (it == table().end()) return std::nullopt;
  return it->second;
}

bool is_builtin_macro(const Symbol& name) {
  return name == "AND" || name == "OR" || name == "COND" || name == "LIST";
}

}  // namespace specforge
