#include "check.hpp"

#include <algorithm>

#include "error.hpp"
#include "eval.hpp"

namespace specforge {

std::string format_binding(const std::vector<std::pair<Symbol, SExpr>>& b) {
  std::string out;
  for (size_t i = 0; i < b.size(); i++) {
    if (i) out += ", ";
    out += b[i].first + " = " + show(b[i].second);
  }
  if (b.empty()) out = "(no free variables)";
  return out;
}

Verdict check_formula(const World& w, const Term& formula, const Universe& u) {
  std::vector<Symbol> vars = free_vars(formula);
  std::sort(vars.begin(), vars.end());

  const size_t n = vars.size();
  const size_t m = u.values.size();
  if (m == 0 && n > 0)
    throw Error(ErrKind::BadArg, "check universe has no values");
  std::vector<size_t> idx(n, 0);

  for (;;) {
    Env env;
    for (size_t i = 0; i < n; i++) env[vars[i]] = u.values[idx[i]];
    try {
      SExpr v = eval_term(w, formula, env, u.fuel);
      if (v.is_nil()) {
        Verdict r;
        r.kind = Verdict::Kind::Fail;
        for (const Symbol& var : vars)
          r.counterexample.emplace_back(var, env[var]);
        return r;
      }
    } catch (const EvalError& e) {
      Verdict r;
      r.kind = Verdict::Kind::Unknown;
      switch (e.why()) {
        case EvalWhy::FuelExhausted: r.reason = "fuel-exhausted"; break;
        case EvalWhy::AbstractFunction: r.reason = "abstract-function"; break;
        default: r.reason = e.what(); break;
      }
      return r;
    }
    // Next assignment: rightmost variable varies fastest.
    size_t i = n;
    while (i > 0) {
      i--;
      if (++idx[i] < m) break;
      idx[i] = 0;
      if (i == 0) return Verdict{};
    }
    if (n == 0) return Verdict{};
  }
}

std::vector<Discharge> discharge(const World& w,
                                 const std::vector<Term>& obligations,
                                 const Universe& u) {
  std::vector<Discharge> out;
  std::vector<Symbol> thms = w.theorem_names();
  for (size_t i = 0; i < obligations.size(); i++) {
    const Term& ob = obligations[i];
    const Symbol* matched = nullptr;
    for (const Symbol& name : thms) {
      if (alpha_equal(w.theorem_of(name).formula, ob)) {
        matched = &name;
        break;
      }
    }
    if (matched) {
      out.push_back(Discharge{Discharge::Method::ByTheorem, *matched});
      continue;
    }
    bool executable = true;
    for (const Symbol& f : fns_called(ob))
      if (!w.fn_executable(f)) executable = false;
    std::string ob_text = show(term_to_sexpr(ob));
    if (!executable)
      throw Error(ErrKind::Admit,
                  "obligation " + std::to_string(i + 1) + " cannot be "
                  "discharged: no admitted theorem matches and it is not "
                  "executable: " + ob_text);
    Verdict v = check_formula(w, ob, u);
    if (v.pass()) {
      out.push_back(Discharge{Discharge::Method::ByCheck, Symbol()});
      continue;
    }
    if (v.fail())
      throw Error(ErrKind::Admit,
                  "obligation " + std::to_string(i + 1) + " fails: " +
                      ob_text + "; counterexample: " +
                      format_binding(v.counterexample));
    throw Error(ErrKind::Admit,
                "obligation " + std::to_string(i + 1) +
                    " could not be checked (" + v.reason + "): " + ob_text);
  }
  return out;
}

}  // namespace specforge
