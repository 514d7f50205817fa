#include "term.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace specforge {

namespace {
struct VarNode {
  Symbol name;
};
struct QuoteNode {
  SExpr value;
};
struct AppNode {
  Symbol fn;
  Terms args;
};
struct LambdaNode {
  std::vector<Symbol> params;
  Term body;
  Terms args;
};
}  // namespace

struct Term::Node {
  std::variant<VarNode, QuoteNode, AppNode, LambdaNode> v;
};

Term Term::var(const Symbol& name) {
  return Term(std::make_shared<const Node>(Node{VarNode{name}}));
}
Term Term::quote(const SExpr& value) {
  return Term(std::make_shared<const Node>(Node{QuoteNode{value}}));
}
Term Term::app(const Symbol& fn, Terms args) {
  return Term(std::make_shared<const Node>(Node{AppNode{fn, std::move(args)}}));
}
Term Term::lambda_app(std::vector<Symbol> params, Term body, Terms args) {
  return Term(std::make_shared<const Node>(
      Node{LambdaNode{std::move(params), std::move(body), std::move(args)}}));
}

TermKind Term::kind() const {
  switch (node_->v.index()) {
    case 0: return TermKind::Var;
    case 1: return TermKind::Quote;
    case 2: return TermKind::App;
    default: return TermKind::LambdaApp;
  }
}

const Symbol& Term::var_name() const { return std::get<VarNode>(node_->v).name; }
const SExpr& Term::quoted() const { return std::get<QuoteNode>(node_->v).value; }
const Symbol& Term::fn() const { return std::get<AppNode>(node_->v).fn; }
const Terms& Term::args() const { return std::get<AppNode>(node_->v).args; }
const std::vector<Symbol>& Term::params() const {
  return std::get<LambdaNode>(node_->v).params;
}
const Term& Term::body() const { return std::get<LambdaNode>(node_->v).body; }
const Terms& Term::lambda_args() const {
  return std::get<LambdaNode>(node_->v).args;
}

bool Term::operator==(const Term& o) const {
  if (node_ == o.node_) return true;
  if (!node_ || !o.node_) return false;
  if (kind() != o.kind()) return false;
  switch (kind()) {
    case TermKind::Var: return var_name() == o.var_name();
    case TermKind::Quote: return quoted() == o.quoted();
    case TermKind::App: return fn() == o.fn() && args() == o.args();
    case TermKind::LambdaApp:
      return params() == o.params() && body() == o.body() &&
             lambda_args() == o.lambda_args();
  }
  return false;
}

namespace {

void free_vars_into(const Term& t, std::vector<Symbol>& out,
                    std::vector<std::set<Symbol>>& bound) {
  switch (t.kind()) {
    case TermKind::Var: {
      for (auto it = bound.rbegin(); it != bound.rend(); ++it)
        if (it->count(t.var_name())) return;
      if (std::find(out.begin(), out.end(), t.var_name()) == out.end())
        out.push_back(t.var_name());
      return;
    }
    case TermKind::Quote: return;
    case TermKind::App:
      for (const Term& a : t.args()) free_vars_into(a, out, bound);
      return;
    case TermKind::LambdaApp: {
      for (const Term& a : t.lambda_args()) free_vars_into(a, out, bound);
      bound.emplace_back(t.params().begin(), t.params().end());
      free_vars_into(t.body(), out, bound);
      bound.pop_back();
      return;
    }
  }
}

void fns_into(const Term& t, std::vector<Symbol>& out) {
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::Quote: return;
    case TermKind::App:
      if (std::find(out.begin(), out.end(), t.fn()) == out.end())
        out.push_back(t.fn());
      for (const Term& a : t.args()) fns_into(a, out);
      return;
    case TermKind::LambdaApp:
      fns_into(t.body(), out);
      for (const Term& a : t.lambda_args()) fns_into(a, out);
      return;
  }
}

void sexpr_symbols(const SExpr& v, std::vector<Symbol>& out) {
  if (v.is_symbol()) {
    if (std::find(out.begin(), out.end(), v.sym()) == out.end())
      out.push_back(v.sym());
  } else if (v.is_pair()) {
    sexpr_symbols(v.head(), out);
    sexpr_symbols(v.tail(), out);
  }
}

}  // namespace

std::vector<Symbol> free_vars(const Term& t) {
  std::vector<Symbol> out;
  std::vector<std::set<Symbol>> bound;
  free_vars_into(t, out, bound);
  return out;
}

std::vector<Symbol> fns_called(const Term& t) {
  std::vector<Symbol> out;
  fns_into(t, out);
  return out;
}

bool mentions_fn(const Term& t, const Symbol& fn) {
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::Quote: return false;
    case TermKind::App:
      if (t.fn() == fn) return true;
      for (const Term& a : t.args())
        if (mentions_fn(a, fn)) return true;
      return false;
    case TermKind::LambdaApp:
      if (mentions_fn(t.body(), fn)) return true;
      for (const Term& a : t.lambda_args())
        if (mentions_fn(a, fn)) return true;
      return false;
  }
  return false;
}

void collect_symbols(const Term& t, std::vector<Symbol>& out) {
  auto add = [&out](const Symbol& s) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  };
  switch (t.kind()) {
    case TermKind::Var: add(t.var_name()); return;
    case TermKind::Quote: sexpr_symbols(t.quoted(), out); return;
    case TermKind::App:
      add(t.fn());
      for (const Term& a : t.args()) collect_symbols(a, out);
      return;
    case TermKind::LambdaApp:
      for (const Symbol& p : t.params()) add(p);
      collect_symbols(t.body(), out);
      for (const Term& a : t.lambda_args()) collect_symbols(a, out);
      return;
  }
}

SExpr term_to_sexpr(const Term& t) {
  switch (t.kind()) {
    case TermKind::Var: return SExpr::symbol(t.var_name());
    case TermKind::Quote:
      return SExpr::list({SExpr::symbol("QUOTE"), t.quoted()});
    case TermKind::App: {
      std::vector<SExpr> items{SExpr::symbol(t.fn())};
      for (const Term& a : t.args()) items.push_back(term_to_sexpr(a));
      return SExpr::list(items);
    }
    case TermKind::LambdaApp: {
      std::vector<SExpr> ps;
      for (const Symbol& p : t.params()) ps.push_back(SExpr::symbol(p));
      SExpr lam = SExpr::list({SExpr::symbol("LAMBDA"), SExpr::list(ps),
                               term_to_sexpr(t.body())});
      std::vector<SExpr> items{lam};
      for (const Term& a : t.lambda_args()) items.push_back(term_to_sexpr(a));
      return SExpr::list(items);
    }
  }
  return SExpr::nil();
}

namespace {

// Scoped variable correspondence for alpha comparison. Bound scopes are
// positional; free variables build up a bijection.
struct AlphaCtx {
  std::vector<std::pair<std::vector<Symbol>, std::vector<Symbol>>> scopes;
  std::map<Symbol, Symbol> fwd, bwd;

  bool vars_match(const Symbol& a, const Symbol& b) {
    for (auto it = scopes.rbegin(); it != scopes.rend(); ++it) {
      const auto& [pa, pb] = *it;
      auto ia = std::find(pa.begin(), pa.end(), a);
      auto ib = std::find(pb.begin(), pb.end(), b);
      bool ba = ia != pa.end(), bb = ib != pb.end();
      if (ba || bb)
        return ba && bb && (ia - pa.begin()) == (ib - pb.begin());
    }
    auto f = fwd.find(a);
    if (f != fwd.end()) return f->second == b;
    auto g = bwd.find(b);
    if (g != bwd.end()) return false;
    fwd[a] = b;
    bwd[b] = a;
    return true;
  }
};

bool alpha_eq(const Term& a, const Term& b, AlphaCtx& ctx) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TermKind::Var: return ctx.vars_match(a.var_name(), b.var_name());
    case TermKind::Quote: return a.quoted() == b.quoted();
    case TermKind::App: {
      if (a.fn() != b.fn() || a.args().size() != b.args().size()) return false;
      for (size_t i = 0; i < a.args().size(); i++)
        if (!alpha_eq(a.args()[i], b.args()[i], ctx)) return false;
      return true;
    }
    case TermKind::LambdaApp: {
      if (a.params().size() != b.params().size() ||
          a.lambda_args().size() != b.lambda_args().size())
        return false;
      for (size_t i = 0; i < a.lambda_args().size(); i++)
        if (!alpha_eq(a.lambda_args()[i], b.lambda_args()[i], ctx))
          return false;
      ctx.scopes.emplace_back(a.params(), b.params());
      bool ok = alpha_eq(a.body(), b.body(), ctx);
      ctx.scopes.pop_back();
      return ok;
    }
  }
  return false;
}

}  // namespace

bool alpha_equal(const Term& a, const Term& b) {
  AlphaCtx ctx;
  return alpha_eq(a, b, ctx);
}

}  // namespace specforge
