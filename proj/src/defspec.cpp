#include "defspec.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "builtins.hpp"
#include "error.hpp"
#include "events.hpp"
#include "instantiate.hpp"
#include "translate.hpp"

namespace specforge {

DefSpecInput parse_defspec(const SExpr& form) {
  auto elems = form.proper();
  if (!elems || elems->size() < 3)
    throw Error(ErrKind::Admit,
                "malformed defspec: expected (defspec name (signatures) "
                "events...)");
  DefSpecInput in;
  if (!(*elems)[1].is_symbol())
    throw Error(ErrKind::Admit, "malformed defspec: expected a name");
  in.name = (*elems)[1].sym();
  auto sigs = (*elems)[2].proper();
  if (!sigs || sigs->empty())
    throw Error(ErrKind::Admit,
                "malformed defspec: expected a non-empty signature list");
  for (const SExpr& s : *sigs) {
    auto parts = s.proper();
    if (!parts || parts->size() != 3 || !(*parts)[0].is_symbol())
      throw Error(ErrKind::Admit, "malformed signature: " + show(s));
    if (!(*parts)[2].is_sym("T"))
      throw Error(ErrKind::Admit,
                  "malformed signature (output must be T): " + show(s));
    Signature sig;
    sig.fn = (*parts)[0].sym();
    auto formals = (*parts)[1].proper();
    if (!formals)
      throw Error(ErrKind::Admit, "malformed signature: " + show(s));
    for (const SExpr& f : *formals) {
      if (!f.is_symbol())
        throw Error(ErrKind::Admit, "malformed signature: " + show(s));
      sig.formals.push_back(f.sym());
    }
    in.sigs.push_back(std::move(sig));
  }
  in.body_forms.assign(elems->begin() + 3, elems->end());
  return in;
}

std::vector<Term> constraints_of(const World& w, const Symbol& spec) {
  const DefSpecEv* s = w.defspec(spec);
  if (!s) throw Error(ErrKind::Query, spec + " does not name a defspec");
  std::vector<Term> out;
  for (const Symbol& name : s->constraint_names)
    out.push_back(w.theorem_of(name).formula);
  return out;
}

std::vector<DefThmEv> is_a_expand(const World& scratch, const Symbol& spec,
                                  const Symbol& prefix,
                                  const Symbol& base_name,
                                  const FnSubst& rename) {
  const DefSpecEv* s = scratch.defspec(spec);
  if (!s) throw Error(ErrKind::Admit, spec + " does not name a defspec");

  FnSubst map = rename;
  for (const Signature& sig : s->sigs) {
    Symbol target;
    if (const SubstTarget* t = map.find(sig.fn)) {
      const auto* n = std::get_if<NameTarget>(t);
      if (!n)
        throw Error(ErrKind::Admit,
                    "is-a rename entries must be name pairs (" + sig.fn + ")");
      target = n->name;
    } else {
      target = prefixed(prefix, sig.fn);
      map.add(sig.fn, NameTarget{target});
    }
    std::size_t arity;
    if (auto ba = builtin_arity(target)) {
      arity = static_cast<std::size_t>(*ba);
    } else if (const FnInfo* fi = scratch.fn_info(target)) {
      arity = fi->formals.size();
    } else {
      throw Error(ErrKind::Admit,
                  "is-a: incomplete mapping: target " + target +
                      " for " + spec + " function " + sig.fn +
                      " is not defined");
    }
    if (arity != sig.formals.size())
      throw Error(ErrKind::Admit,
                  "is-a: target " + target + " for " + sig.fn +
                      " has the wrong arity");
  }

  std::vector<Term> constraints = constraints_of(scratch, spec);
  std::vector<DefThmEv> out;
  for (size_t i = 0; i < constraints.size(); i++) {
    DefThmEv t;
    t.name = base_name + "-" + std::to_string(i);
    if (scratch.has_name(t.name))
      throw Error(ErrKind::Admit, "is-a: name collision: " + t.name);
    t.formula = replacefns(map, constraints[i]);
    out.push_back(std::move(t));
  }
  return out;
}

namespace {

void check_exported_visibility(const World& visible, const DefThmEv& t,
                               const std::set<Symbol>& sig_names) {
  auto check_term = [&](const Term& term) {
    for (const Symbol& f : fns_called(term)) {
      if (sig_names.count(f) || is_builtin_fn(f) || visible.fn_info(f))
        continue;
      throw Error(ErrKind::Admit,
                  "exported theorem " + t.name + " references " + f +
                      ", which is local to the defspec");
    }
  };
  check_term(t.formula);
  for (const RuleClass& rc : t.classes)
    for (const auto& [attr, terms] : rc.attrs)
      for (const Term& tm : terms) check_term(tm);
}

}  // namespace

World admit_defspec(const World& w, const DefSpecInput& input,
                    const AdmitOptions& opts) {
  const Universe& u = opts.universe ? *opts.universe : default_universe();
  std::set<Symbol> sig_names;
  for (const Signature& sig : input.sigs) {
    if (!sig_names.insert(sig.fn).second)
      throw Error(ErrKind::Admit,
                  "duplicate signature function: " + sig.fn);
  }

  // Local events are checked in a scratch world and then dropped.
  World scratch = w;
  AdmitOptions scratch_opts;
  scratch_opts.universe = &u;
  scratch_opts.assume = opts.assume;
  std::vector<DefThmEv> exported;

  for (const SExpr& form : input.body_forms) {
    if (!form.is_pair() || !form.head().is_symbol())
      throw Error(ErrKind::Admit,
                  "malformed defspec body form: " + show(form));
    const Symbol& kind = form.head().sym();
    if (kind == "LOCAL") {
      auto parts = form.proper();
      if (!parts || parts->size() != 2)
        throw Error(ErrKind::Admit, "malformed local event: " + show(form));
      const SExpr& inner = (*parts)[1];
      Symbol ik = inner.is_pair() && inner.head().is_symbol()
                      ? inner.head().sym()
                      : Symbol();
      if (ik == "DEFUN") {
        scratch = admit(scratch, parse_defun(scratch, inner), scratch_opts);
      } else if (ik == "DEFTHM") {
        scratch = admit(scratch, parse_defthm(scratch, inner), scratch_opts);
      } else {
        throw Error(ErrKind::Admit,
                    "local events must be defun or defthm: " + show(inner));
      }
    } else if (kind == "DEFTHM") {
      DefThmEv t = parse_defthm(scratch, form);
      // Checked against the witnesses; failures surface here.
      scratch = admit(scratch, t, scratch_opts);
      exported.push_back(std::get<DefThmEv>(scratch.event(scratch.size() - 1)));
    } else if (kind == "IS-A") {
      auto parts = form.proper();
      if (!parts || (parts->size() != 4 && parts->size() != 5))
        throw Error(ErrKind::Admit,
                    "malformed is-a: expected (is-a spec prefix base-name "
                    "[rename])");
      for (size_t i = 1; i <= 3; i++)
        if (!(*parts)[i].is_symbol())
          throw Error(ErrKind::Admit, "malformed is-a: " + show(form));
      RawRename raw = parse_rename(
          scratch, parts->size() == 5 ? (*parts)[4] : SExpr::nil());
      FnSubst rename;
      for (const RawRenameEntry& e : raw.entries) {
        if (e.kind != RawRenameEntry::Kind::Name)
          throw Error(ErrKind::Admit,
                      "is-a rename entries must be name pairs (" +
                          e.old_name + ")");
        rename.add(e.old_name, NameTarget{e.target});
      }
      std::vector<DefThmEv> thms =
          is_a_expand(scratch, (*parts)[1].sym(), (*parts)[2].sym(),
                      (*parts)[3].sym(), rename);
      for (DefThmEv& t : thms) {
        scratch = admit(scratch, t, scratch_opts);
        exported.push_back(std::move(t));
      }
    } else {
      throw Error(ErrKind::Admit,
                  "defspec bodies may contain only local events, defthm "
                  "and is-a: " + show(form));
    }
  }

  // Every signature function needs a local witness of the same arity.
  for (const Signature& sig : input.sigs) {
    const FnInfo* fi = scratch.fn_info(sig.fn);
    if (!fi || !fi->body || w.fn_info(sig.fn))
      throw Error(ErrKind::Admit,
                  "missing local witness for signature function " + sig.fn);
    if (fi->formals.size() != sig.formals.size())
      throw Error(ErrKind::Admit,
                  "witness for " + sig.fn + " takes " +
                      std::to_string(fi->formals.size()) +
                      " argument(s) but the signature declares " +
                      std::to_string(sig.formals.size()));
  }

  for (const DefThmEv& t : exported) check_exported_visibility(w, t, sig_names);

  // Build the visible world: the spec record with its abstract functions,
  // then the exported theorems. The scratch world is discarded.
  DefSpecEv ev;
  ev.name = input.name;
  ev.sigs = input.sigs;
  for (const DefThmEv& t : exported) ev.constraint_names.push_back(t.name);
  World out = admit(w, ev, opts);
  for (const DefThmEv& t : exported) {
    AdmitOptions quiet;
    quiet.universe = &u;
    quiet.assume = true;  // already checked against the witnesses
    out = admit(out, t, quiet);
    if (opts.report)
      opts.report->add("[" + std::to_string(out.size() - 1) + "] defthm " +
                       t.name + " admitted (checked against witnesses)");
  }
  return out;
}

}  // namespace specforge
