#include "sexpr.hpp"

#include <cassert>
#include <utility>
#include <variant>

namespace specforge {

struct SExpr::Node {
  std::variant<Symbol, BigInt, std::pair<SExpr, SExpr>> v;
};

SExpr::SExpr() {
  static const auto nil_node =
      std::make_shared<const Node>(Node{Symbol("NIL")});
  node_ = nil_node;
}

SExpr SExpr::symbol(const Symbol& name) {
  return SExpr(std::make_shared<const Node>(Node{name}));
}

SExpr SExpr::integer(BigInt value) {
  return SExpr(std::make_shared<const Node>(Node{std::move(value)}));
}

SExpr SExpr::integer(long long value) { return integer(BigInt(value)); }

SExpr SExpr::cons(const SExpr& head, const SExpr& tail) {
  return SExpr(std::make_shared<const Node>(Node{std::make_pair(head, tail)}));
}

SExpr SExpr::nil() { return SExpr(); }

SExpr SExpr::truth() {
  static const SExpr t = symbol("T");
  return t;
}

SExpr SExpr::list(const std::vector<SExpr>& elems) {
  SExpr r = nil();
  for (size_t i = elems.size(); i-- > 0;) r = cons(elems[i], r);
  return r;
}

bool SExpr::is_symbol() const {
  return std::holds_alternative<Symbol>(node_->v);
}
bool SExpr::is_integer() const {
  return std::holds_alternative<BigInt>(node_->v);
}
bool SExpr::is_pair() const {
  return std::holds_alternative<std::pair<SExpr, SExpr>>(node_->v);
}

const Symbol& SExpr::sym() const { return std::get<Symbol>(node_->v); }
const BigInt& SExpr::num() const { return std::get<BigInt>(node_->v); }
const SExpr& SExpr::head() const {
  return std::get<std::pair<SExpr, SExpr>>(node_->v).first;
}
const SExpr& SExpr::tail() const {
  return std::get<std::pair<SExpr, SExpr>>(node_->v).second;
}

bool SExpr::operator==(const SExpr& o) const {
  if (node_ == o.node_) return true;
  if (node_->v.index() != o.node_->v.index()) return false;
  if (is_symbol()) return sym() == o.sym();
  if (is_integer()) return num() == o.num();
  return head() == o.head() && tail() == o.tail();
}

std::optional<std::vector<SExpr>> SExpr::proper() const {
  std::vector<SExpr> out;
  SExpr cur = *this;
  while (cur.is_pair()) {
    out.push_back(cur.head());
    cur = cur.tail();
  }
  if (!cur.is_nil()) return std::nullopt;
  return out;
}

namespace {

bool is_quote_form(const SExpr& v) {
  return v.is_pair() && v.head().is_sym("QUOTE") && v.tail().is_pair() &&
         v.tail().tail().is_nil();
}

void show_into(const SExpr& v, std::string& out) {
  if (v.is_symbol()) {
    out += v.sym();
    return;
  }
  if (v.is_integer()) {
    out += v.num().str();
    return;
  }
  if (is_quote_form(v)) {
    out += '\'';
    show_into(v.tail().head(), out);
    return;
  }
  out += '(';
  show_into(v.head(), out);
  SExpr cur = v.tail();
  while (cur.is_pair()) {
    out += ' ';
    show_into(cur.head(), out);
    cur = cur.tail();
  }
  if (!cur.is_nil()) {
    out += " . ";
    show_into(cur, out);
  }
  out += ')';
}

}  // namespace

std::string show(const SExpr& v) {
  std::string out;
  show_into(v, out);
  return out;
}

}  // namespace specforge
