#include "world.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "builtins.hpp"
#include "check.hpp"
#include "error.hpp"

namespace specforge {

const Symbol& event_name(const Event& e) {
  return std::visit([](const auto& ev) -> const Symbol& { return ev.name; }, e);
}

const char* event_kind(const Event& e) {
  struct K {
    const char* operator()(const DefUnEv&) { return "defun"; }
    const char* operator()(const DefThmEv&) { return "defthm"; }
    const char* operator()(const DefConstEv&) { return "defconst"; }
    const char* operator()(const DefSpecEv&) { return "defspec"; }
    const char* operator()(const InstanceEv&) { return "instance"; }
  };
  return std::visit(K{}, e);
}

std::string Report::text() const {
  std::string out;
  for (const auto& l : lines) {
    out += l;
    out += '\n';
  }
  return out;
}

bool World::has_name(const Symbol& name) const {
  return ix_.position.count(name) > 0;
}

std::size_t World::decode_logical_name(const Symbol& name) const {
  auto it = ix_.position.find(name);
  if (it == ix_.position.end())
    throw Error(ErrKind::Query, "unknown logical name: " + name);
  return it->second;
}

const FnInfo* World::fn_info(const Symbol& name) const {
  auto it = ix_.fns.find(name);
  return it == ix_.fns.end() ? nullptr : &it->second;
}

bool World::fn_defined(const Symbol& name) const {
  const FnInfo* fi = fn_info(name);
  return fi != nullptr && fi->body.has_value();
}

bool World::fn_abstract(const Symbol& name) const {
  const FnInfo* fi = fn_info(name);
  return fi != nullptr && !fi->body.has_value();
}

const DefThmEv* World::theorem(const Symbol& name) const {
  auto it = ix_.thms.find(name);
  if (it == ix_.thms.end()) return nullptr;
  return &std::get<DefThmEv>(*events_[it->second]);
}

const DefThmEv& World::theorem_of(const Symbol& name) const {
  const DefThmEv* t = theorem(name);
  if (!t) throw Error(ErrKind::Query, name + " does not name a theorem");
  return *t;
}

const DefSpecEv* World::defspec(const Symbol& name) const {
  auto it = ix_.specs.find(name);
  if (it == ix_.specs.end()) return nullptr;
  return &std::get<DefSpecEv>(*events_[it->second]);
}

const SExpr* World::constant(const Symbol& name) const {
  auto it = ix_.consts.find(name);
  if (it == ix_.consts.end()) return nullptr;
  return &std::get<DefConstEv>(*events_[it->second]).value;
}

std::vector<Symbol> World::symbol_lemmas(const Symbol& sym) const {
  auto it = ix_.thm_mentions.find(sym);
  if (it == ix_.thm_mentions.end()) return {};
  return it->second;
}

std::vector<Symbol> World::theorem_names() const {
  std::vector<Symbol> out;
  for (const auto& e : events_)
    if (const auto* t = std::get_if<DefThmEv>(e.get())) out.push_back(t->name);
  return out;
}

bool World::fn_executable(const Symbol& name) const {
  std::set<Symbol> visiting;
  std::function<bool(const Symbol&)> go = [&](const Symbol& f) -> bool {
    if (is_builtin_fn(f)) return true;
    const FnInfo* fi = fn_info(f);
    if (!fi || !fi->body) return false;
    if (!visiting.insert(f).second) return true;  // recursive call
    for (const Symbol& g : fns_called(*fi->body))
      if (!go(g)) return false;
    return true;
  };
  return go(name);
}

namespace {

// Symbols a theorem mentions, for the mention index: formula symbols plus
// every rule-class attribute term's symbols.
std::vector<Symbol> theorem_mentions(const DefThmEv& t) {
  std::vector<Symbol> out;
  collect_symbols(t.formula, out);
  for (const RuleClass& rc : t.classes)
    for (const auto& [attr, terms] : rc.attrs)
      for (const Term& tm : terms) collect_symbols(tm, out);
  return out;
}

bool legal_var(const Symbol& s) {
  return s != "T" && s != "NIL" && !s.empty() && s[0] != ':';
}

}  // namespace

void World::Indices::index_event(const Event& e, std::size_t ordinal) {
  position[event_name(e)] = ordinal;
  if (const auto* d = std::get_if<DefUnEv>(&e)) {
    fns[d->name] = FnInfo{d->formals, d->body, ordinal, d->doc};
  } else if (const auto* t = std::get_if<DefThmEv>(&e)) {
    thms[t->name] = ordinal;
    for (const Symbol& s : theorem_mentions(*t)) {
      auto& v = thm_mentions[s];
      if (std::find(v.begin(), v.end(), t->name) == v.end())
        v.push_back(t->name);
    }
  } else if (const auto* c = std::get_if<DefConstEv>(&e)) {
    consts[c->name] = ordinal;
  } else if (const auto* s = std::get_if<DefSpecEv>(&e)) {
    specs[s->name] = ordinal;
    for (const Signature& sig : s->sigs) {
      position[sig.fn] = ordinal;
      fns[sig.fn] = FnInfo{sig.formals, std::nullopt, ordinal, std::nullopt};
    }
  }
  // InstanceEv only occupies its name.
}

bool World::Indices::operator==(const Indices& o) const {
  return position == o.position && fns == o.fns && thms == o.thms &&
         specs == o.specs && consts == o.consts &&
         thm_mentions == o.thm_mentions;
}

bool World::indices_consistent() const {
  Indices rebuilt;
  for (std::size_t i = 0; i < events_.size(); i++)
    rebuilt.index_event(*events_[i], i);
  return rebuilt == ix_;
}

void validate_term(const World& w, const Term& t, const Symbol* self_name,
                   std::size_t self_arity) {
  switch (t.kind()) {
    case TermKind::Var:
      if (!legal_var(t.var_name()))
        throw Error(ErrKind::Admit,
                    t.var_name() + " is not a legal variable name");
      return;
    case TermKind::Quote: return;
    case TermKind::App: {
      const Symbol& f = t.fn();
      std::size_t arity;
      if (self_name && f == *self_name) {
        arity = self_arity;
      } else if (auto ba = builtin_arity(f)) {
        arity = static_cast<std::size_t>(*ba);
      } else if (const FnInfo* fi = w.fn_info(f)) {
        arity = fi->formals.size();
      } else {
        throw Error(ErrKind::Admit, "unknown function symbol: " + f);
      }
      if (t.args().size() != arity)
        throw Error(ErrKind::Admit,
                    "arity mismatch: " + f + " takes " + std::to_string(arity) +
                        " argument(s), got " + std::to_string(t.args().size()));
      for (const Term& a : t.args()) validate_term(w, a, self_name, self_arity);
      return;
    }
    case TermKind::LambdaApp: {
      std::set<Symbol> seen;
      for (const Symbol& p : t.params()) {
        if (!legal_var(p))
          throw Error(ErrKind::Admit, p + " is not a legal lambda parameter");
        if (!seen.insert(p).second)
          throw Error(ErrKind::Admit, "duplicate lambda parameter: " + p);
      }
      if (t.params().size() != t.lambda_args().size())
        throw Error(ErrKind::Admit, "malformed lambda: parameter/argument "
                                    "count mismatch");
      validate_term(w, t.body(), self_name, self_arity);
      for (const Term& a : t.lambda_args())
        validate_term(w, a, self_name, self_arity);
      return;
    }
  }
}

namespace {

void require_fresh(const World& w, const Symbol& name) {
  if (name.empty() || name == "T" || name == "NIL" || name[0] == ':')
    throw Error(ErrKind::Admit, "reserved name: " + name);
  if (w.has_name(name) || is_builtin_fn(name) || is_builtin_macro(name) ||
      name == "QUOTE" || name == "LAMBDA")
    throw Error(ErrKind::Admit, "name already in use: " + name);
}

void validate_formals(const std::vector<Symbol>& formals) {
  std::set<Symbol> seen;
  for (const Symbol& f : formals) {
    if (!legal_var(f))
      throw Error(ErrKind::Admit, f + " is not a legal formal parameter");
    if (!seen.insert(f).second)
      throw Error(ErrKind::Admit, "duplicate formal parameter: " + f);
  }
}

}  // namespace

World admit(const World& w, Event e, const AdmitOptions& opts) {
  const Universe& universe = opts.universe ? *opts.universe : default_universe();
  std::string line;

  if (auto* d = std::get_if<DefUnEv>(&e)) {
    require_fresh(w, d->name);
    validate_formals(d->formals);
    validate_term(w, d->body, &d->name, d->formals.size());
    line = "defun " + d->name + " admitted";
  } else if (auto* t = std::get_if<DefThmEv>(&e)) {
    require_fresh(w, t->name);
    validate_term(w, t->formula, nullptr, 0);
    if (t->classes.empty()) t->classes.push_back(RuleClass{":REWRITE", {}});
    for (const RuleClass& rc : t->classes)
      for (const auto& [attr, terms] : rc.attrs)
        for (const Term& tm : terms) validate_term(w, tm, nullptr, 0);
    if (t->just.has_value()) {
      line = "defthm " + t->name + " admitted (copied from " +
             t->just->origin + ")";
      if (opts.paranoid) {
        bool executable = true;
        for (const Symbol& f : fns_called(t->formula))
          if (!w.fn_executable(f)) executable = false;
        if (!executable) {
          line += " (paranoid: skipped, not executable)";
        } else {
          Verdict v = check_formula(w, t->formula, universe);
          if (v.fail())
            throw Error(ErrKind::Admit,
                        "paranoid re-check of copied theorem " + t->name +
                            " failed; counterexample: " +
                            format_binding(v.counterexample));
          if (v.kind == Verdict::Kind::Unknown)
            throw Error(ErrKind::Admit, "paranoid re-check of copied theorem " +
                                            t->name + " gave up: " + v.reason);
          line += " (paranoid check: pass)";
        }
      }
    } else if (opts.assume) {
      line = "defthm " + t->name + " admitted (assumed: --assume)";
    } else {
      Verdict v = check_formula(w, t->formula, universe);
      switch (v.kind) {
        case Verdict::Kind::Pass:
          line = "defthm " + t->name + " admitted (check: pass)";
          break;
        case Verdict::Kind::Fail:
          throw Error(ErrKind::Admit,
                      "theorem " + t->name + " fails; counterexample: " +
                          format_binding(v.counterexample));
        case Verdict::Kind::Unknown:
          if (v.reason == "abstract-function") {
            line = "defthm " + t->name + " admitted (assumed: mentions "
                   "abstract functions)";
          } else {
            throw Error(ErrKind::Admit,
                        "theorem " + t->name + " could not be checked (" +
                            v.reason + "); raise --fuel or use --assume");
          }
          break;
      }
    }
  } else if (auto* c = std::get_if<DefConstEv>(&e)) {
    require_fresh(w, c->name);
    if (c->name.size() < 3 || c->name.front() != '*' || c->name.back() != '*')
      throw Error(ErrKind::Admit,
                  "constant names must be asterisk-wrapped: " + c->name);
    line = "defconst " + c->name + " admitted";
  } else if (auto* s = std::get_if<DefSpecEv>(&e)) {
    require_fresh(w, s->name);
    std::set<Symbol> taken{s->name};
    for (const Signature& sig : s->sigs) {
      require_fresh(w, sig.fn);
      if (!taken.insert(sig.fn).second)
        throw Error(ErrKind::Admit, "name already in use: " + sig.fn);
      validate_formals(sig.formals);
    }
    line = "defspec " + s->name + " admitted";
  } else if (auto* i = std::get_if<InstanceEv>(&e)) {
    require_fresh(w, i->name);
    if (!w.defspec(i->spec))
      throw Error(ErrKind::Admit, i->spec + " does not name a defspec");
    line = "instance " + i->name + " of " + i->spec + " recorded";
  }

  World next = w;
  std::size_t ordinal = next.events_.size();
  next.events_.push_back(std::make_shared<const Event>(std::move(e)));
  next.ix_.index_event(*next.events_.back(), ordinal);
  if (opts.report)
    opts.report->add("[" + std::to_string(ordinal) + "] " + line);
  return next;
}

namespace {

SExpr formals_sexpr(const std::vector<Symbol>& formals) {
  std::vector<SExpr> fs;
  for (const Symbol& f : formals) fs.push_back(SExpr::symbol(f));
  return SExpr::list(fs);
}

SExpr subst_to_sexpr(const FnSubst& subst) {
  std::vector<SExpr> entries;
  for (const auto& [old_name, target] : subst.entries) {
    if (std::holds_alternative<SkipTarget>(target))
      entries.push_back(SExpr::list({SExpr::symbol(old_name)}));
    else
      entries.push_back(
          SExpr::list({SExpr::symbol(old_name), target_to_sexpr(target)}));
  }
  return SExpr::list(entries);
}

}  // namespace

std::string World::dump(const std::optional<Symbol>& name) const {
  std::ostringstream out;
  for (std::size_t i = 0; i < events_.size(); i++) {
    const Event& e = *events_[i];
    if (name && event_name(e) != *name) continue;
    if (const auto* d = std::get_if<DefUnEv>(&e)) {
      out << "(EVENT-LANDMARK GLOBAL-VALUE " << i << " DEFUN " << d->name
          << " " << show(formals_sexpr(d->formals)) << " "
          << show(term_to_sexpr(d->body)) << ")\n";
    } else if (const auto* t = std::get_if<DefThmEv>(&e)) {
      out << "(EVENT-LANDMARK GLOBAL-VALUE " << i << " DEFTHM " << t->name
          << ")\n";
      out << "  (" << t->name << " THEOREM " << show(term_to_sexpr(t->formula))
          << ")\n";
      std::vector<SExpr> cls;
      for (const RuleClass& rc : t->classes) cls.push_back(SExpr::symbol(rc.kind));
      out << "  (" << t->name << " CLASSES " << show(SExpr::list(cls)) << ")\n";
    } else if (const auto* c = std::get_if<DefConstEv>(&e)) {
      out << "(EVENT-LANDMARK GLOBAL-VALUE " << i << " DEFCONST " << c->name
          << " " << show(c->value) << ")\n";
    } else if (const auto* s = std::get_if<DefSpecEv>(&e)) {
      std::vector<SExpr> fns, sigs;
      for (const Signature& sig : s->sigs) {
        fns.push_back(SExpr::symbol(sig.fn));
        sigs.push_back(SExpr::list({SExpr::symbol(sig.fn),
                                    formals_sexpr(sig.formals),
                                    SExpr::truth()}));
      }
      out << "(EVENT-LANDMARK GLOBAL-VALUE " << i << " (ENCAPSULATE "
          << show(SExpr::list(fns)) << ") " << s->name << " "
          << show(SExpr::list(sigs)) << ")\n";
    } else if (const auto* ins = std::get_if<InstanceEv>(&e)) {
      out << "(EVENT-LANDMARK GLOBAL-VALUE " << i << " (DEFINSTANCE "
          << ins->spec << " " << ins->name << " :FUNCTIONAL-SUBSTITUTION "
          << show(subst_to_sexpr(ins->subst)) << "))\n";
    }
  }
  return out.str();
}

}  // namespace specforge
