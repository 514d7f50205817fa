#include "subst.hpp"

#include "copyfun.hpp"

#include <algorithm>
#include <set>

#include "builtins.hpp"
#include "error.hpp"
#include "world.hpp"

namespace specforge {

const SubstTarget* FnSubst::find(const Symbol& old_name) const {
  for (const auto& [o, t] : entries)
    if (o == old_name) return &t;
  return nullptr;
}

void FnSubst::add(const Symbol& old_name, SubstTarget target) {
  if (find(old_name))
    throw Error(ErrKind::Admit,
                "duplicate substitution entry for " + old_name);
  entries.emplace_back(old_name, std::move(target));
}

SExpr target_to_sexpr(const SubstTarget& t) {
  if (const auto* n = std::get_if<NameTarget>(&t)) return SExpr::symbol(n->name);
  if (const auto* l = std::get_if<LambdaTarget>(&t)) {
    std::vector<SExpr> ps;
    for (const Symbol& p : l->params) ps.push_back(SExpr::symbol(p));
    return SExpr::list({SExpr::symbol("LAMBDA"), SExpr::list(ps),
                        term_to_sexpr(l->body)});
  }
  return SExpr::nil();
}

Term replacefns(const FnSubst& subst, const Term& t) {
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::Quote: return t;
    case TermKind::App: {
      Terms args;
      args.reserve(t.args().size());
      for (const Term& a : t.args()) args.push_back(replacefns(subst, a));
      Symbol head = t.fn();
      if (const SubstTarget* tgt = subst.find(head)) {
        const auto* n = std::get_if<NameTarget>(tgt);
        if (!n)
          throw Error(ErrKind::BadArg,
                      "replacefns accepts name pairs only (entry for " + head +
                          " is not a name)");
        head = n->name;
      }
      return Term::app(head, std::move(args));
    }
    case TermKind::LambdaApp: {
      Terms args;
      for (const Term& a : t.lambda_args()) args.push_back(replacefns(subst, a));
      return Term::lambda_app(t.params(), replacefns(subst, t.body()),
                              std::move(args));
    }
  }
  return t;
}

Terms replacefns(const FnSubst& subst, const Terms& ts) {
  Terms out;
  out.reserve(ts.size());
  for (const Term& t : ts) out.push_back(replacefns(subst, t));
  return out;
}

Term subst_vars(const Term& t, const std::map<Symbol, Term>& binding) {
  switch (t.kind()) {
    case TermKind::Var: {
      auto it = binding.find(t.var_name());
      return it == binding.end() ? t : it->second;
    }
    case TermKind::Quote: return t;
    case TermKind::App: {
      Terms args;
      for (const Term& a : t.args()) args.push_back(subst_vars(a, binding));
      return Term::app(t.fn(), std::move(args));
    }
    case TermKind::LambdaApp: {
      Terms args;
      for (const Term& a : t.lambda_args())
        args.push_back(subst_vars(a, binding));
      // Parameters shadow the substitution inside the body.
      std::map<Symbol, Term> inner = binding;
      for (const Symbol& p : t.params()) inner.erase(p);
      return Term::lambda_app(t.params(), subst_vars(t.body(), inner),
                              std::move(args));
    }
  }
  return t;
}

namespace {

std::string formals_text(const std::vector<Symbol>& formals) {
  std::vector<SExpr> fs;
  for (const Symbol& f : formals) fs.push_back(SExpr::symbol(f));
  return show(SExpr::list(fs));
}

}  // namespace

void validate_lambda(const std::vector<Symbol>& old_formals,
                     const LambdaTarget& target) {
  if (target.params == old_formals) return;
  throw Error(ErrKind::Admit,
              "Error in COPYFUN: the lambda construct " +
                  show(target_to_sexpr(SubstTarget(target))) +
                  " takes as input " + formals_text(target.params) +
                  ", which should be an exact match of the original "
                  "arguments of the original function: " +
                  formals_text(old_formals));
}

namespace {

// Head rewriting inside a lambda-target body. Plain renames apply; any
// entry that would add arguments here is one level of nesting too deep
// and is rejected.
Term rewrite_lambda_body(const Term& t, const FnSubst& subst,
                         const ExtrasMap& extras_of) {
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::Quote: return t;
    case TermKind::App: {
      Terms args;
      for (const Term& a : t.args())
        args.push_back(rewrite_lambda_body(a, subst, extras_of));
      Symbol head = t.fn();
      if (const SubstTarget* tgt = subst.find(head)) {
        if (std::holds_alternative<LambdaTarget>(*tgt))
          throw Error(ErrKind::Admit,
                      "nested argument-adding substitution: lambda target "
                      "body calls " + head + ", which is itself replaced "
                      "by a lambda");
        if (std::holds_alternative<SkipTarget>(*tgt))
          throw Error(ErrKind::Admit,
                      "skipped name " + head + " used in function position");
        auto ex = extras_of.find(head);
        if (ex != extras_of.end() && !ex->second.empty())
          throw Error(ErrKind::Admit,
                      "nested argument-adding substitution: lambda target "
                      "body calls " + head + ", whose copy takes extra "
                      "arguments");
        head = std::get<NameTarget>(*tgt).name;
      }
      return Term::app(head, std::move(args));
    }
    case TermKind::LambdaApp: {
      Terms args;
      for (const Term& a : t.lambda_args())
        args.push_back(rewrite_lambda_body(a, subst, extras_of));
      return Term::lambda_app(t.params(),
                              rewrite_lambda_body(t.body(), subst, extras_of),
                              std::move(args));
    }
  }
  return t;
}

}  // namespace

Term rewrite_under(const Term& t, const FnSubst& subst,
                   const ExtrasMap& extras_of) {
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::Quote: return t;
    case TermKind::App: {
      Terms args;
      for (const Term& a : t.args())
        args.push_back(rewrite_under(a, subst, extras_of));
      const SubstTarget* tgt = subst.find(t.fn());
      if (!tgt) return Term::app(t.fn(), std::move(args));
      if (const auto* n = std::get_if<NameTarget>(tgt)) {
        auto ex = extras_of.find(t.fn());
        if (ex != extras_of.end())
          for (const Symbol& e : ex->second) args.push_back(Term::var(e));
        return Term::app(n->name, std::move(args));
      }
      if (const auto* l = std::get_if<LambdaTarget>(tgt)) {
        Term body = rewrite_lambda_body(l->body, subst, extras_of);
        std::map<Symbol, Term> binding;
        for (size_t i = 0; i < l->params.size(); i++)
          binding[l->params[i]] = args[i];
        return subst_vars(body, binding);
      }
      throw Error(ErrKind::Admit,
                  "skipped name " + t.fn() + " used in function position");
    }
    case TermKind::LambdaApp: {
      Terms args;
      for (const Term& a : t.lambda_args())
        args.push_back(rewrite_under(a, subst, extras_of));
      return Term::lambda_app(t.params(),
                              rewrite_under(t.body(), subst, extras_of),
                              std::move(args));
    }
  }
  return t;
}

namespace {

// Extra variables a lambda target introduces beyond its parameters.
std::vector<Symbol> lambda_extras(const LambdaTarget& l) {
  std::vector<Symbol> out;
  for (const Symbol& v : free_vars(l.body))
    if (std::find(l.params.begin(), l.params.end(), v) == l.params.end())
      out.push_back(v);
  return out;
}

void collect_extras(const Term& t, const FnSubst& subst,
                    const ExtrasMap& extras_of, std::vector<Symbol>& out) {
  auto add = [&out](const Symbol& s) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  };
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::Quote: return;
    case TermKind::App: {
      if (const SubstTarget* tgt = subst.find(t.fn())) {
        if (const auto* l = std::get_if<LambdaTarget>(tgt))
          for (const Symbol& e : lambda_extras(*l)) add(e);
        else if (std::holds_alternative<NameTarget>(*tgt)) {
          auto ex = extras_of.find(t.fn());
          if (ex != extras_of.end())
            for (const Symbol& e : ex->second) add(e);
        }
      }
      for (const Term& a : t.args()) collect_extras(a, subst, extras_of, out);
      return;
    }
    case TermKind::LambdaApp: {
      collect_extras(t.body(), subst, extras_of, out);
      for (const Term& a : t.lambda_args())
        collect_extras(a, subst, extras_of, out);
      return;
    }
  }
}

void collect_lambda_params(const Term& t, std::set<Symbol>& out) {
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::Quote: return;
    case TermKind::App:
      for (const Term& a : t.args()) collect_lambda_params(a, out);
      return;
    case TermKind::LambdaApp:
      out.insert(t.params().begin(), t.params().end());
      collect_lambda_params(t.body(), out);
      for (const Term& a : t.lambda_args()) collect_lambda_params(a, out);
      return;
  }
}

}  // namespace

CopyResult copy_function(const World& w, const DefUnEv& old,
                         const FnSubst& subst, const Symbol& new_name,
                         const ExtrasMap& extras_of) {
  // Unmapped callees must already mean something on their own.
  for (const Symbol& f : fns_called(old.body)) {
    if (f == old.name || subst.find(f) || is_builtin_fn(f)) continue;
    if (!w.fn_info(f))
      throw Error(ErrKind::Admit, "cannot copy " + old.name +
                                      ": unmapped dependency " + f);
  }

  const SubstTarget* self = subst.find(old.name);
  if (self) {
    if (const auto* l = std::get_if<LambdaTarget>(self))
      validate_lambda(old.formals, *l);
    if (std::holds_alternative<SkipTarget>(*self))
      throw Error(ErrKind::Admit, "cannot skip a function: " + old.name);
  }
  for (const auto& [o, tgt] : subst.entries) {
    if (o == old.name || !mentions_fn(old.body, o)) continue;
    if (const auto* l = std::get_if<LambdaTarget>(&tgt)) {
      const FnInfo* fi = w.fn_info(o);
      if (fi) validate_lambda(fi->formals, *l);
    }
  }

  std::vector<Symbol> extras;
  collect_extras(old.body, subst, extras_of, extras);
  if (self) {
    if (const auto* l = std::get_if<LambdaTarget>(self)) {
      for (const Symbol& e : lambda_extras(*l))
        if (std::find(extras.begin(), extras.end(), e) == extras.end())
          extras.push_back(e);
    }
  }

  for (const Symbol& e : extras)
    if (std::find(old.formals.begin(), old.formals.end(), e) !=
        old.formals.end())
      throw Error(ErrKind::Admit,
                  "cannot copy " + old.name + ": extra lambda variable " + e +
                      " clashes with an existing formal");
  std::set<Symbol> inner_params;
  collect_lambda_params(old.body, inner_params);
  for (const Symbol& e : extras)
    if (inner_params.count(e))
      throw Error(ErrKind::Admit,
                  "cannot copy " + old.name + ": extra lambda variable " + e +
                      " is shadowed by a lambda inside the body");

  std::vector<Symbol> new_formals = old.formals;
  new_formals.insert(new_formals.end(), extras.begin(), extras.end());

  // A lambda self-target must spell out the copy's exact signature:
  // (LAMBDA (old-formals) (new-name old-formals extras...)).
  if (self) {
    if (const auto* l = std::get_if<LambdaTarget>(self)) {
      bool shape_ok = l->body.kind() == TermKind::App &&
                      l->body.fn() == new_name &&
                      l->body.args().size() == new_formals.size();
      if (shape_ok)
        for (size_t i = 0; i < new_formals.size(); i++)
          if (l->body.args()[i].kind() != TermKind::Var ||
              l->body.args()[i].var_name() != new_formals[i])
            shape_ok = false;
      if (!shape_ok) {
        std::vector<SExpr> expect{SExpr::symbol(new_name)};
        for (const Symbol& f : new_formals) expect.push_back(SExpr::symbol(f));
        throw Error(ErrKind::Admit,
                    "lambda target for " + old.name + " must have body " +
                        show(SExpr::list(expect)) +
                        " (original formals, then extra variables)");
      }
    }
  }

  FnSubst effective = subst;
  if (!self) effective.add(old.name, NameTarget{new_name});
  ExtrasMap em = extras_of;
  em[old.name] = extras;

  DefUnEv def;
  def.name = new_name;
  def.formals = std::move(new_formals);
  def.body = rewrite_under(old.body, effective, em);
  def.doc = old.doc;
  return CopyResult{std::move(def), std::move(extras)};
}

}  // namespace specforge
