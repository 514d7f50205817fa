#include "instantiate.hpp"

#include <algorithm>
#include <set>

#include "analyze.hpp"
#include "builtins.hpp"
#include "check.hpp"
#include "copyfun.hpp"
#include "defspec.hpp"
#include "error.hpp"
#include "translate.hpp"

namespace specforge {

Symbol prefixed(const Symbol& prefix, const Symbol& name) {
  return prefix + "-" + name;
}

const RawRenameEntry* RawRename::find(const Symbol& old_name) const {
  for (const RawRenameEntry& e : entries)
    if (e.old_name == old_name) return &e;
  return nullptr;
}

RawRename parse_rename(const World& w, const SExpr& arg) {
  RawRename out;
  SExpr lst = arg;
  if (arg.is_nil()) return out;
  if (arg.is_symbol()) {
    const SExpr* v = w.constant(arg.sym());
    if (!v)
      throw Error(ErrKind::Admit,
                  arg.sym() + " does not name a defined constant");
    lst = *v;
  } else if (arg.is_pair() && arg.head().is_sym("QUOTE") &&
             arg.tail().is_pair() && arg.tail().tail().is_nil()) {
    lst = arg.tail().head();
  } else {
    throw Error(ErrKind::Admit,
                "rename argument must be a quoted list or a constant name");
  }
  if (lst.is_nil()) return out;
  auto entries = lst.proper();
  if (!entries)
    throw Error(ErrKind::Admit, "rename list must be a proper list");
  std::set<Symbol> seen;
  for (const SExpr& e : *entries) {
    auto parts = e.proper();
    if (!parts || parts->empty() || parts->size() > 2 ||
        !(*parts)[0].is_symbol())
      throw Error(ErrKind::Admit, "malformed rename entry: " + show(e));
    RawRenameEntry entry;
    entry.old_name = (*parts)[0].sym();
    if (!seen.insert(entry.old_name).second)
      throw Error(ErrKind::Admit,
                  "duplicate rename entry for " + entry.old_name);
    if (parts->size() == 1) {
      entry.kind = RawRenameEntry::Kind::Skip;
    } else if ((*parts)[1].is_symbol()) {
      entry.kind = RawRenameEntry::Kind::Name;
      entry.target = (*parts)[1].sym();
    } else if ((*parts)[1].is_pair() && (*parts)[1].head().is_sym("LAMBDA")) {
      auto lam = (*parts)[1].proper();
      if (!lam || lam->size() != 3)
        throw Error(ErrKind::Admit,
                    "malformed lambda target: " + show((*parts)[1]));
      auto params = (*lam)[1].proper();
      if (!params)
        throw Error(ErrKind::Admit,
                    "malformed lambda target: " + show((*parts)[1]));
      entry.kind = RawRenameEntry::Kind::Lambda;
      for (const SExpr& p : *params) {
        if (!p.is_symbol())
          throw Error(ErrKind::Admit,
                      "malformed lambda target: " + show((*parts)[1]));
        entry.lambda_params.push_back(p.sym());
      }
      entry.lambda_body = (*lam)[2];
    } else {
      throw Error(ErrKind::Admit, "malformed rename entry: " + show(e));
    }
    out.entries.push_back(std::move(entry));
  }
  return out;
}

namespace {

std::size_t arity_of(const World& w, const Symbol& fn) {
  if (auto ba = builtin_arity(fn)) return static_cast<std::size_t>(*ba);
  const FnInfo* fi = w.fn_info(fn);
  if (!fi) throw Error(ErrKind::Admit, fn + " is not defined");
  return fi->formals.size();
}

// A derived-function lambda target names the copy in its body:
// (LAMBDA (formals) (new-name formals extras...)). Parsed structurally
// since the new name does not exist yet.
Term parse_fresh_app(const SExpr& body, const Symbol& old_name) {
  auto parts = body.proper();
  if (!parts || parts->empty() || !(*parts)[0].is_symbol())
    throw Error(ErrKind::Admit,
                "lambda target for " + old_name +
                    " must apply the new function name to variables: " +
                    show(body));
  Terms args;
  std::set<Symbol> seen;
  for (size_t i = 1; i < parts->size(); i++) {
    if (!(*parts)[i].is_symbol() || !seen.insert((*parts)[i].sym()).second)
      throw Error(ErrKind::Admit,
                  "lambda target for " + old_name +
                      " must apply the new function name to distinct "
                      "variables: " + show(body));
    args.push_back(Term::var((*parts)[i].sym()));
  }
  return Term::app((*parts)[0].sym(), std::move(args));
}

struct SubstBuild {
  FnSubst subst;
  std::vector<Symbol> dfuns;
  std::vector<Symbol> dthms;
};

SubstBuild build_substitution_full(const World& w, const Symbol& spec,
                                   const Symbol& prefix,
                                   const RawRename& rename, Report* report) {
  const DefSpecEv* s = w.defspec(spec);
  if (!s) throw Error(ErrKind::Admit, spec + " does not name a defspec");

  SubstBuild out;
  std::vector<Symbol> roots;
  for (const Signature& sig : s->sigs) roots.push_back(sig.fn);
  out.dfuns = derived_funs(w, roots, w.size());
  std::vector<Symbol> all_fns = roots;
  all_fns.insert(all_fns.end(), out.dfuns.begin(), out.dfuns.end());
  out.dthms = derived_thms(w, all_fns, w.size());

  std::set<Symbol> used;
  std::set<Symbol> allocated;
  auto claim_fresh = [&](const Symbol& n, const Symbol& for_name) {
    if (w.has_name(n) || is_builtin_fn(n) || !allocated.insert(n).second)
      throw Error(ErrKind::Admit,
                  "target name " + n + " for " + for_name +
                      " is already in use");
  };

  for (const Signature& sig : s->sigs) {
    const RawRenameEntry* e = rename.find(sig.fn);
    if (e) used.insert(sig.fn);
    if (e && e->kind == RawRenameEntry::Kind::Skip)
      throw Error(ErrKind::Admit, "cannot skip a function: " + sig.fn);
    if (e && e->kind == RawRenameEntry::Kind::Lambda) {
      LambdaTarget lt{e->lambda_params, translate(w, e->lambda_body)};
      validate_lambda(sig.formals, lt);
      out.subst.add(sig.fn, std::move(lt));
      continue;
    }
    Symbol target = e ? e->target : prefixed(prefix, sig.fn);
    std::size_t arity;
    if (auto ba = builtin_arity(target)) {
      arity = static_cast<std::size_t>(*ba);
    } else if (const FnInfo* fi = w.fn_info(target)) {
      arity = fi->formals.size();
    } else {
      throw Error(ErrKind::Admit,
                  "target " + target + " for " + spec + " function " +
                      sig.fn + " is not defined");
    }
    if (arity != sig.formals.size())
      throw Error(ErrKind::Admit,
                  "target " + target + " for " + sig.fn +
                      " has the wrong arity");
    out.subst.add(sig.fn, NameTarget{target});
  }

  for (const Symbol& f : out.dfuns) {
    const RawRenameEntry* e = rename.find(f);
    if (e) used.insert(f);
    if (e && e->kind == RawRenameEntry::Kind::Skip)
      throw Error(ErrKind::Admit,
                  "cannot skip a function: " + f +
                      " (only theorems may be skipped)");
    if (e && e->kind == RawRenameEntry::Kind::Lambda) {
      LambdaTarget lt{e->lambda_params, parse_fresh_app(e->lambda_body, f)};
      validate_lambda(w.fn_info(f)->formals, lt);
      claim_fresh(lt.body.fn(), f);
      out.subst.add(f, std::move(lt));
      continue;
    }
    Symbol target = e ? e->target : prefixed(prefix, f);
    claim_fresh(target, f);
    out.subst.add(f, NameTarget{target});
  }

  for (const Symbol& t : out.dthms) {
    const RawRenameEntry* e = rename.find(t);
    if (e) used.insert(t);
    if (e && e->kind == RawRenameEntry::Kind::Lambda)
      throw Error(ErrKind::Admit,
                  "theorems cannot have lambda targets: " + t);
    if (e && e->kind == RawRenameEntry::Kind::Skip) {
      out.subst.add(t, SkipTarget{});
      continue;
    }
    Symbol target = e ? e->target : prefixed(prefix, t);
    claim_fresh(target, t);
    out.subst.add(t, NameTarget{target});
  }

  if (report)
    for (const RawRenameEntry& e : rename.entries)
      if (!used.count(e.old_name))
        report->add("  note: rename entry " + e.old_name +
                    " matches nothing and was ignored");
  return out;
}

}  // namespace

FnSubst build_substitution(const World& w, const Symbol& spec,
                           const Symbol& prefix, const RawRename& rename,
                           Report* report) {
  return build_substitution_full(w, spec, prefix, rename, report).subst;
}

std::vector<Term> definstance_obligations(const World& w, const Symbol& spec,
                                          const FnSubst& subst) {
  const DefSpecEv* s = w.defspec(spec);
  if (!s) throw Error(ErrKind::Admit, spec + " does not name a defspec");
  FnSubst roots_only;
  for (const Signature& sig : s->sigs)
    if (const SubstTarget* t = subst.find(sig.fn))
      roots_only.add(sig.fn, *t);
  std::vector<Term> out;
  for (const Term& c : constraints_of(w, spec))
    out.push_back(rewrite_under(c, roots_only, {}));
  return out;
}

World instance_of_defspec(const World& w, const Symbol& spec,
                          const Symbol& prefix, const SExpr& rename_arg,
                          const AdmitOptions& opts) {
  const Universe& u = opts.universe ? *opts.universe : default_universe();
  RawRename rename = parse_rename(w, rename_arg);
  SubstBuild sb = build_substitution_full(w, spec, prefix, rename, opts.report);

  std::vector<Term> obligations = definstance_obligations(w, spec, sb.subst);
  std::vector<Discharge> methods = discharge(w, obligations, u);

  Symbol instance_name = prefixed(prefix, spec);
  World out = admit(w, InstanceEv{spec, instance_name, sb.subst}, opts);
  if (opts.report) {
    for (size_t i = 0; i < methods.size(); i++) {
      if (methods[i].method == Discharge::Method::ByTheorem)
        opts.report->add("  obligation " + std::to_string(i + 1) +
                         " discharged by-theorem " + methods[i].theorem);
      else
        opts.report->add("  obligation " + std::to_string(i + 1) +
                         " discharged by-check (pass)");
    }
  }

  // Copy the derived functions in world order; callees precede callers.
  ExtrasMap extras_of;
  for (const Symbol& f : sb.dfuns) {
    const auto& old = std::get<DefUnEv>(w.event(w.decode_logical_name(f)));
    const SubstTarget* tgt = sb.subst.find(f);
    Symbol new_name;
    if (const auto* n = std::get_if<NameTarget>(tgt)) {
      new_name = n->name;
    } else {
      new_name = std::get<LambdaTarget>(*tgt).body.fn();
    }
    CopyResult cr = copy_function(w, old, sb.subst, new_name, extras_of);
    extras_of[f] = cr.extras;
    out = admit(out, std::move(cr.def), opts);
  }

  // Copy the derived theorems; the justification stands in for re-proving.
  for (const Symbol& t : sb.dthms) {
    const SubstTarget* tgt = sb.subst.find(t);
    if (std::holds_alternative<SkipTarget>(*tgt)) {
      if (opts.report) opts.report->add("  theorem " + t + " skipped");
      continue;
    }
    const DefThmEv& old = w.theorem_of(t);
    DefThmEv copy;
    copy.name = std::get<NameTarget>(*tgt).name;
    copy.formula = rewrite_under(old.formula, sb.subst, extras_of);
    for (const RuleClass& rc : old.classes) {
      RuleClass rc2{rc.kind, {}};
      for (const auto& [attr, terms] : rc.attrs) {
        Terms ts;
        for (const Term& tm : terms)
          ts.push_back(rewrite_under(tm, sb.subst, extras_of));
        rc2.attrs.emplace_back(attr, std::move(ts));
      }
      copy.classes.push_back(std::move(rc2));
    }
    copy.just = Justification{t, sb.subst, instance_name};
    out = admit(out, std::move(copy), opts);
  }
  return out;
}

}  // namespace specforge
