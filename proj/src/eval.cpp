#include "eval.hpp"

#include <algorithm>

#include "builtins.hpp"
#include "error.hpp"

namespace specforge {

namespace {

struct Ctx {
  const World& w;
  const FnBind* fnbind;
  const Env* top_env;  // extra lambda variables resolve here
  long fuel;
};

SExpr ev(Ctx& c, const Term& t, const Env& env);

SExpr boolean(bool b) { return b ? SExpr::truth() : SExpr::nil(); }

BigInt as_int(const SExpr& v) {
  // The completion convention: non-integers count as 0.
  return v.is_integer() ? v.num() : BigInt(0);
}

SExpr apply_builtin(const Symbol& f, const std::vector<SExpr>& a) {
  if (f == "CONS") return SExpr::cons(a[0], a[1]);
  if (f == "CAR") return a[0].is_pair() ? a[0].head() : SExpr::nil();
  if (f == "CDR") return a[0].is_pair() ? a[0].tail() : SExpr::nil();
  if (f == "CONSP") return boolean(a[0].is_pair());
  if (f == "ATOM" || f == "ENDP") return boolean(!a[0].is_pair());
  if (f == "NULL") return boolean(a[0].is_nil());
  if (f == "EQUAL") return boolean(a[0] == a[1]);
  if (f == "NOT") return boolean(a[0].is_nil());
  if (f == "IMPLIES") return boolean(a[0].is_nil() || a[1].truthy());
  if (f == "INTEGERP") return boolean(a[0].is_integer());
  if (f == "+") return SExpr::integer(as_int(a[0]) + as_int(a[1]));
  if (f == "MEMBER-EQUAL") {
    SExpr cur = a[1];
    while (cur.is_pair()) {
      if (cur.head() == a[0]) return cur;  // the matching tail
      cur = cur.tail();
    }
    return SExpr::nil();
  }
  throw EvalError(EvalWhy::Other, "unknown builtin: " + f);
}

SExpr apply_fn(Ctx& c, const Symbol& f, const std::vector<SExpr>& argv) {
  if (f != "IF" && is_builtin_fn(f)) return apply_builtin(f, argv);
  const FnInfo* fi = c.w.fn_info(f);
  if (!fi) throw EvalError(EvalWhy::Other, "undefined function: " + f);
  if (fi->formals.size() != argv.size())
    throw EvalError(EvalWhy::Other, "arity mismatch applying " + f);
  if (fi->body) {
    if (c.fuel <= 0) throw EvalError(EvalWhy::FuelExhausted, "fuel exhausted");
    c.fuel--;
    Env env;
    for (size_t i = 0; i < argv.size(); i++) env[fi->formals[i]] = argv[i];
    return ev(c, *fi->body, env);
  }
  // Abstract function: redirect through the bindings when present.
  if (c.fnbind) {
    auto it = c.fnbind->find(f);
    if (it != c.fnbind->end()) {
      if (const auto* n = std::get_if<NameTarget>(&it->second))
        return apply_fn(c, n->name, argv);
      if (const auto* l = std::get_if<LambdaTarget>(&it->second)) {
        Env env;
        for (size_t i = 0; i < l->params.size() && i < argv.size(); i++)
          env[l->params[i]] = argv[i];
        for (const Symbol& v : free_vars(l->body)) {
          if (env.count(v)) continue;
          auto ev_it = c.top_env ? c.top_env->find(v) : Env::const_iterator{};
          if (!c.top_env || ev_it == c.top_env->end())
            throw EvalError(EvalWhy::UnboundVariable,
                            "extra lambda variable " + v +
                                " is not bound in the environment");
          env[v] = ev_it->second;
        }
        return ev(c, l->body, env);
      }
      throw EvalError(EvalWhy::Other, "unusable binding for " + f);
    }
  }
  throw EvalError(EvalWhy::AbstractFunction,
                  f + " is an abstract function and cannot be evaluated");
}

SExpr ev(Ctx& c, const Term& t, const Env& env) {
  switch (t.kind()) {
    case TermKind::Var: {
      auto it = env.find(t.var_name());
      if (it == env.end())
        throw EvalError(EvalWhy::UnboundVariable,
                        "unbound variable: " + t.var_name());
      return it->second;
    }
    case TermKind::Quote: return t.quoted();
    case TermKind::App: {
      if (t.fn() == "IF") {
        SExpr cond = ev(c, t.args()[0], env);
        return ev(c, cond.truthy() ? t.args()[1] : t.args()[2], env);
      }
      std::vector<SExpr> argv;
      argv.reserve(t.args().size());
      for (const Term& a : t.args()) argv.push_back(ev(c, a, env));
      return apply_fn(c, t.fn(), argv);
    }
    case TermKind::LambdaApp: {
      Env inner;
      for (size_t i = 0; i < t.params().size(); i++)
        inner[t.params()[i]] = ev(c, t.lambda_args()[i], env);
      return ev(c, t.body(), inner);
    }
  }
  throw EvalError(EvalWhy::Other, "invalid term");
}

}  // namespace

SExpr eval_term(const World& w, const Term& t, const Env& env, long fuel) {
  Ctx c{w, nullptr, nullptr, fuel};
  return ev(c, t, env);
}

SExpr eval_with_bindings(const World& w, const Term& t, const Env& env,
                         const FnBind& fnbind, long fuel) {
  Ctx c{w, &fnbind, &env, fuel};
  return ev(c, t, env);
}

}  // namespace specforge
