#include "events.hpp"

#include "defspec.hpp"
#include "error.hpp"
#include "eval.hpp"
#include "instantiate.hpp"
#include "translate.hpp"

namespace specforge {

namespace {

Symbol head_symbol(const SExpr& form) {
  if (form.is_pair() && form.head().is_symbol()) return form.head().sym();
  return Symbol();
}

Symbol require_name(const std::vector<SExpr>& elems, size_t i,
                    const char* what) {
  if (i >= elems.size() || !elems[i].is_symbol())
    throw Error(ErrKind::Admit, std::string("malformed ") + what +
                                    ": expected a name");
  return elems[i].sym();
}

std::vector<Symbol> parse_formals(const SExpr& lst, const char* what) {
  auto elems = lst.proper();
  if (!elems)
    throw Error(ErrKind::Admit, std::string("malformed ") + what +
                                    ": formals must be a proper list");
  std::vector<Symbol> out;
  for (const SExpr& e : *elems) {
    if (!e.is_symbol())
      throw Error(ErrKind::Admit, std::string("malformed ") + what +
                                      ": bad formal " + show(e));
    out.push_back(e.sym());
  }
  return out;
}

RuleClass parse_rule_class(const World& w, const SExpr& spec) {
  auto check_kind = [](const Symbol& k) {
    if (k != ":REWRITE" && k != ":TYPE-PRESCRIPTION" &&
        k != ":FORWARD-CHAINING")
      throw Error(ErrKind::Admit, "unsupported rule class: " + k);
  };
  if (spec.is_symbol()) {
    check_kind(spec.sym());
    return RuleClass{spec.sym(), {}};
  }
  auto parts = spec.proper();
  if (!parts || parts->empty() || !(*parts)[0].is_symbol())
    throw Error(ErrKind::Admit, "malformed rule class: " + show(spec));
  RuleClass rc{(*parts)[0].sym(), {}};
  check_kind(rc.kind);
  for (size_t i = 1; i + 1 < parts->size(); i += 2) {
    if (!(*parts)[i].is_symbol() || (*parts)[i].sym().empty() ||
        (*parts)[i].sym()[0] != ':')
      throw Error(ErrKind::Admit, "malformed rule class attribute in " +
                                      show(spec));
    Symbol attr = (*parts)[i].sym();
    Terms terms;
    if (attr == ":TRIGGER-TERMS") {
      auto forms = (*parts)[i + 1].proper();
      if (!forms)
        throw Error(ErrKind::Admit, ":TRIGGER-TERMS expects a list of terms");
      for (const SExpr& f : *forms) terms.push_back(translate(w, f));
    } else {
      terms.push_back(translate(w, (*parts)[i + 1]));
    }
    rc.attrs.emplace_back(attr, std::move(terms));
  }
  if (parts->size() % 2 == 0)
    throw Error(ErrKind::Admit, "malformed rule class: " + show(spec));
  return rc;
}

}  // namespace

bool is_event_form(const SExpr& form) {
  Symbol h = head_symbol(form);
  return h == "DEFUN" || h == "DEFTHM" || h == "DEFCONST" || h == "DEFSPEC" ||
         h == "INSTANCE-OF-DEFSPEC";
}

DefUnEv parse_defun(const World& w, const SExpr& form) {
  auto elems = form.proper();
  if (!elems || elems->size() != 4)
    throw Error(ErrKind::Admit,
                "malformed defun: expected (defun name (formals) body)");
  DefUnEv d;
  d.name = require_name(*elems, 1, "defun");
  d.formals = parse_formals((*elems)[2], "defun");
  LocalFns self;
  self.arities[d.name] = d.formals.size();
  d.body = translate(w, (*elems)[3], &self);
  return d;
}

DefThmEv parse_defthm(const World& w, const SExpr& form) {
  auto elems = form.proper();
  if (!elems || (elems->size() != 3 && elems->size() != 5))
    throw Error(ErrKind::Admit,
                "malformed defthm: expected (defthm name formula "
                "[:rule-classes classes])");
  DefThmEv t;
  t.name = require_name(*elems, 1, "defthm");
  t.formula = translate(w, (*elems)[2]);
  if (elems->size() == 5) {
    if (!(*elems)[3].is_sym(":RULE-CLASSES"))
      throw Error(ErrKind::Admit, "malformed defthm: expected :rule-classes");
    const SExpr& spec = (*elems)[4];
    if (spec.is_symbol() && !spec.is_nil()) {
      t.classes.push_back(parse_rule_class(w, spec));
    } else {
      auto items = spec.proper();
      if (!items)
        throw Error(ErrKind::Admit, "malformed :rule-classes: " + show(spec));
      for (const SExpr& item : *items)
        t.classes.push_back(parse_rule_class(w, item));
    }
  }
  return t;
}

DefConstEv parse_defconst(const World& w, const SExpr& form, long fuel) {
  auto elems = form.proper();
  if (!elems || elems->size() != 3)
    throw Error(ErrKind::Admit,
                "malformed defconst: expected (defconst *name* value)");
  DefConstEv c;
  c.name = require_name(*elems, 1, "defconst");
  Term body = translate(w, (*elems)[2]);
  if (!free_vars(body).empty())
    throw Error(ErrKind::Admit,
                "defconst value must be a ground expression");
  c.value = eval_term(w, body, {}, fuel);
  return c;
}

World process_event_form(const World& w, const SExpr& form,
                         const AdmitOptions& opts) {
  const Universe& u = opts.universe ? *opts.universe : default_universe();
  Symbol h = head_symbol(form);
  if (h == "DEFUN") return admit(w, parse_defun(w, form), opts);
  if (h == "DEFTHM") return admit(w, parse_defthm(w, form), opts);
  if (h == "DEFCONST") return admit(w, parse_defconst(w, form, u.fuel), opts);
  if (h == "DEFSPEC") return admit_defspec(w, parse_defspec(form), opts);
  if (h == "INSTANCE-OF-DEFSPEC") {
    auto elems = form.proper();
    if (!elems || (elems->size() != 3 && elems->size() != 4))
      throw Error(ErrKind::Admit,
                  "malformed instance-of-defspec: expected "
                  "(instance-of-defspec spec prefix [rename])");
    Symbol spec = require_name(*elems, 1, "instance-of-defspec");
    Symbol prefix = require_name(*elems, 2, "instance-of-defspec");
    SExpr rename = elems->size() == 4 ? (*elems)[3] : SExpr::nil();
    return instance_of_defspec(w, spec, prefix, rename, opts);
  }
  throw Error(ErrKind::Admit, "not an event form: " + show(form));
}

}  // namespace specforge
