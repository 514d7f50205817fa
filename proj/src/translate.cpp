#include "translate.hpp"

#include <set>

#include "builtins.hpp"
#include "error.hpp"

namespace specforge {

namespace {

bool self_evaluating_symbol(const Symbol& s) {
  return s == "T" || s == "NIL" || (!s.empty() && s[0] == ':');
}

std::vector<Symbol> parse_params(const SExpr& lst, const char* what) {
  auto elems = lst.proper();
  if (!elems)
    throw Error(ErrKind::Admit, std::string("malformed ") + what +
                                    ": parameter list must be a proper list");
  std::vector<Symbol> params;
  std::set<Symbol> seen;
  for (const SExpr& e : *elems) {
    if (!e.is_symbol() || self_evaluating_symbol(e.sym()))
      throw Error(ErrKind::Admit, std::string("malformed ") + what +
                                      ": bad parameter " + show(e));
    if (!seen.insert(e.sym()).second)
      throw Error(ErrKind::Admit, std::string("malformed ") + what +
                                      ": duplicate parameter " + e.sym());
    params.push_back(e.sym());
  }
  return params;
}

struct Translator {
  const World& w;
  const LocalFns* locals;

  Term go(const SExpr& form) {
    if (form.is_symbol()) {
      if (self_evaluating_symbol(form.sym())) return Term::quote(form);
      return Term::var(form.sym());
    }
    if (form.is_integer()) return Term::quote(form);

    auto elems = form.proper();
    if (!elems || elems->empty())
      throw Error(ErrKind::Admit, "cannot translate " + show(form));
    const SExpr& head = (*elems)[0];
    std::vector<SExpr> rest(elems->begin() + 1, elems->end());

    if (head.is_pair()) return lambda_form(head, rest);
    if (!head.is_symbol())
      throw Error(ErrKind::Admit, show(head) + " is not a function symbol");
    const Symbol& f = head.sym();

    if (f == "QUOTE") {
      if (rest.size() != 1)
        throw Error(ErrKind::Admit, "malformed quote: " + show(form));
      return Term::quote(rest[0]);
    }
    if (f == "AND") return expand_and(rest, 0);
    if (f == "OR") return expand_or(rest, 0);
    if (f == "COND") return expand_cond(rest, 0);
    if (f == "LIST") return expand_list(rest, 0);

    std::size_t arity;
    if (locals && locals->arities.count(f)) {
      arity = locals->arities.at(f);
    } else if (auto ba = builtin_arity(f)) {
      arity = static_cast<std::size_t>(*ba);
    } else if (const FnInfo* fi = w.fn_info(f)) {
      arity = fi->formals.size();
    } else {
      throw Error(ErrKind::Admit, "unknown function symbol: " + f);
    }
    if (rest.size() != arity)
      throw Error(ErrKind::Admit,
                  "arity mismatch: " + f + " takes " + std::to_string(arity) +
                      " argument(s), got " + std::to_string(rest.size()));
    Terms args;
    for (const SExpr& a : rest) args.push_back(go(a));
    return Term::app(f, std::move(args));
  }

  Term lambda_form(const SExpr& head, const std::vector<SExpr>& rest) {
    auto parts = head.proper();
    if (!parts || parts->size() != 3 || !(*parts)[0].is_sym("LAMBDA"))
      throw Error(ErrKind::Admit, "malformed lambda: " + show(head));
    std::vector<Symbol> params = parse_params((*parts)[1], "lambda");
    if (params.size() != rest.size())
      throw Error(ErrKind::Admit,
                  "malformed lambda: " + std::to_string(params.size()) +
                      " parameter(s) applied to " +
                      std::to_string(rest.size()) + " argument(s)");
    Term body = go((*parts)[2]);
    Terms args;
    for (const SExpr& a : rest) args.push_back(go(a));
    return Term::lambda_app(std::move(params), std::move(body),
                            std::move(args));
  }

  Term expand_and(const std::vector<SExpr>& args, size_t i) {
    if (i == args.size()) return Term::quote(SExpr::truth());
    if (i + 1 == args.size()) return go(args[i]);
    return Term::app("IF", {go(args[i]), expand_and(args, i + 1),
                            Term::quote(SExpr::nil())});
  }

  Term expand_or(const std::vector<SExpr>& args, size_t i) {
    if (i == args.size()) return Term::quote(SExpr::nil());
    if (i + 1 == args.size()) return go(args[i]);
    Term a = go(args[i]);
    return Term::app("IF", {a, a, expand_or(args, i + 1)});
  }

  Term expand_cond(const std::vector<SExpr>& clauses, size_t i) {
    if (i == clauses.size()) return Term::quote(SExpr::nil());
    auto clause = clauses[i].proper();
    if (!clause || clause->empty() || clause->size() > 2)
      throw Error(ErrKind::Admit,
                  "malformed cond clause: " + show(clauses[i]));
    Term test = go((*clause)[0]);
    if (clause->size() == 1)
      return Term::app("IF", {test, test, expand_cond(clauses, i + 1)});
    return Term::app("IF",
                     {test, go((*clause)[1]), expand_cond(clauses, i + 1)});
  }

  Term expand_list(const std::vector<SExpr>& args, size_t i) {
    if (i == args.size()) return Term::quote(SExpr::nil());
    return Term::app("CONS", {go(args[i]), expand_list(args, i + 1)});
  }
};

}  // namespace

Term translate(const World& w, const SExpr& form, const LocalFns* locals) {
  Translator tr{w, locals};
  return tr.go(form);
}

namespace {

bool is_quote_nil(const Term& t) {
  return t.kind() == TermKind::Quote && t.quoted().is_nil();
}

}  // namespace

SExpr untranslate(const Term& t) {
  switch (t.kind()) {
    case TermKind::Var: return SExpr::symbol(t.var_name());
    case TermKind::Quote: {
      const SExpr& v = t.quoted();
      if (v.is_integer()) return v;
      if (v.is_symbol() && self_evaluating_symbol(v.sym())) return v;
      return SExpr::list({SExpr::symbol("QUOTE"), v});
    }
    case TermKind::App: {
      if (t.fn() == "IF") {
        const Term& a = t.args()[0];
        const Term& b = t.args()[1];
        const Term& c = t.args()[2];
        if (is_quote_nil(c)) {
          // (IF a b 'NIL) displays as (AND a b), right-flattened.
          SExpr ua = untranslate(a), ub = untranslate(b);
          std::vector<SExpr> items{SExpr::symbol("AND"), ua};
          if (ub.is_pair() && ub.head().is_sym("AND")) {
            auto elems = ub.tail().proper();
            for (const SExpr& e : *elems) items.push_back(e);
          } else {
            items.push_back(ub);
          }
          return SExpr::list(items);
        }
        if (a == b) {
          // (IF a a c) displays as (OR a c), right-flattened.
          SExpr ua = untranslate(a), uc = untranslate(c);
          std::vector<SExpr> items{SExpr::symbol("OR"), ua};
          if (uc.is_pair() && uc.head().is_sym("OR")) {
            auto elems = uc.tail().proper();
            for (const SExpr& e : *elems) items.push_back(e);
          } else {
            items.push_back(uc);
          }
          return SExpr::list(items);
        }
      }
      std::vector<SExpr> items{SExpr::symbol(t.fn())};
      for (const Term& a : t.args()) items.push_back(untranslate(a));
      return SExpr::list(items);
    }
    case TermKind::LambdaApp: {
      std::vector<SExpr> ps;
      for (const Symbol& p : t.params()) ps.push_back(SExpr::symbol(p));
      SExpr lam = SExpr::list({SExpr::symbol("LAMBDA"), SExpr::list(ps),
                               untranslate(t.body())});
      std::vector<SExpr> items{lam};
      for (const Term& a : t.lambda_args()) items.push_back(untranslate(a));
      return SExpr::list(items);
    }
  }
  return SExpr::nil();
}

Term lenient_term(const SExpr& form) {
  if (form.is_symbol()) {
    if (self_evaluating_symbol(form.sym())) return Term::quote(form);
    return Term::var(form.sym());
  }
  if (form.is_integer()) return Term::quote(form);
  auto elems = form.proper();
  if (!elems || elems->empty())
    throw Error(ErrKind::BadArg, "cannot parse term " + show(form));
  const SExpr& head = (*elems)[0];
  std::vector<SExpr> rest(elems->begin() + 1, elems->end());
  if (head.is_pair()) {
    auto parts = head.proper();
    if (!parts || parts->size() != 3 || !(*parts)[0].is_sym("LAMBDA"))
      throw Error(ErrKind::BadArg, "malformed lambda: " + show(head));
    std::vector<Symbol> params = parse_params((*parts)[1], "lambda");
    if (params.size() != rest.size())
      throw Error(ErrKind::BadArg, "malformed lambda application: " +
                                       show(form));
    Terms args;
    for (const SExpr& a : rest) args.push_back(lenient_term(a));
    return Term::lambda_app(std::move(params), lenient_term((*parts)[2]),
                            std::move(args));
  }
  if (!head.is_symbol())
    throw Error(ErrKind::BadArg, show(head) + " is not a function symbol");
  if (head.is_sym("QUOTE")) {
    if (rest.size() != 1)
      throw Error(ErrKind::BadArg, "malformed quote: " + show(form));
    return Term::quote(rest[0]);
  }
  Terms args;
  for (const SExpr& a : rest) args.push_back(lenient_term(a));
  return Term::app(head.sym(), std::move(args));
}

Term normalize_for_display(const Term& t) {
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::Quote: return t;
    case TermKind::App: {
      Terms args;
      for (const Term& a : t.args()) args.push_back(normalize_for_display(a));
      if (t.fn() == "IF") {
        Term test = args[0], then = args[1], els = args[2];
        for (;;) {
          if (test.kind() == TermKind::App && test.fn() == "ATOM") {
            test = Term::app("CONSP", test.args());
            std::swap(then, els);
          } else if (test.kind() == TermKind::App && test.fn() == "NOT") {
            test = test.args()[0];
            std::swap(then, els);
          } else {
            break;
          }
        }
        return Term::app("IF", {test, then, els});
      }
      return Term::app(t.fn(), std::move(args));
    }
    case TermKind::LambdaApp: {
      Terms args;
      for (const Term& a : t.lambda_args())
        args.push_back(normalize_for_display(a));
      return Term::lambda_app(t.params(), normalize_for_display(t.body()),
                              std::move(args));
    }
  }
  return t;
}

Term defining_equation(const World& w, const Symbol& fn) {
  const FnInfo* fi = w.fn_info(fn);
  if (!fi) throw Error(ErrKind::Query, fn + " does not name a function");
  if (!fi->body)
    throw Error(ErrKind::Query,
                fn + " is an abstract function with no defining equation");
  Terms formals;
  for (const Symbol& f : fi->formals) formals.push_back(Term::var(f));
  return Term::app("EQUAL", {Term::app(fn, std::move(formals)),
                             normalize_for_display(*fi->body)});
}

}  // namespace specforge
