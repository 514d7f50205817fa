#include "session.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "analyze.hpp"
#include "defspec.hpp"
#include "error.hpp"
#include "eval.hpp"
#include "events.hpp"
#include "reader.hpp"
#include "subst.hpp"
#include "translate.hpp"

namespace specforge {

namespace {

// The bundled book: an entirely abstract binary function and the three
// fold operations over it.
constexpr const char* kPrelude = R"((defspec binary ((binary-function (x y) t))
  (local (defun binary-function (x y) (cons x y))))
(defun foldr (x xs)
  (if (atom xs) x (binary-function (car xs) (foldr x (cdr xs)))))
(defun foldr1 (xs)
  (if (atom (cdr xs)) (car xs)
    (binary-function (car xs) (foldr1 (cdr xs)))))
(defun foldl (x xs)
  (if (atom xs) x
    (foldl (binary-function x (car xs)) (cdr xs))))
)";

}  // namespace

Session::Session() {
  universe_ = default_universe();
  AdmitOptions opts;
  opts.universe = &universe_;
  for (const SExpr& form : read_all(kPrelude))
    world_ = process_event_form(world_, form, opts);
}

AdmitOptions Session::options(Report* report) const {
  AdmitOptions opts;
  opts.universe = &universe_;
  opts.assume = assume_;
  opts.paranoid = paranoid_;
  opts.report = report;
  return opts;
}

void Session::set_fuel(long fuel) {
  if (fuel <= 0) throw Error(ErrKind::BadArg, "fuel must be positive");
  universe_.fuel = fuel;
}

void Session::set_flag(const std::string& name, bool on) {
  if (name == "paranoid")
    paranoid_ = on;
  else if (name == "assume")
    assume_ = on;
  else
    throw Error(ErrKind::BadArg, "unknown flag: " + name);
}

void Session::apply_form(const SExpr& form, Report* report) {
  if (form.is_pair() && form.head().is_sym("SET-UNIVERSE")) {
    auto elems = form.proper();
    if (!elems || elems->size() != 2)
      throw Error(ErrKind::Admit,
                  "malformed set-universe: expected (set-universe (values))");
    auto values = (*elems)[1].proper();
    if (!values || values->empty())
      throw Error(ErrKind::Admit, "set-universe needs a non-empty list");
    for (size_t i = 0; i < values->size(); i++)
      for (size_t j = i + 1; j < values->size(); j++)
        if ((*values)[i] == (*values)[j])
          throw Error(ErrKind::Admit, "duplicate universe value: " +
                                          show((*values)[i]));
    universe_.values = *values;
    if (report)
      report->add("universe set (" + std::to_string(values->size()) +
                  " values)");
    return;
  }
  if (!is_event_form(form))
    throw Error(ErrKind::Admit, "not an event form: " + show(form));
  world_ = process_event_form(world_, form, options(report));
}

std::string Session::load_text(const std::string& text,
                               const std::string& origin) {
  std::vector<ReadForm> forms;
  try {
    forms = read_all_pos(text);
  } catch (const Error& e) {
    throw Error(e.kind(), origin + ":" + e.what());
  }
  Report report;
  for (const ReadForm& rf : forms) {
    try {
      apply_form(rf.form, &report);
    } catch (const Error& e) {
      if (e.kind() == ErrKind::Eval)
        throw Error(ErrKind::Admit, origin + ":" + std::to_string(rf.line) +
                                        ":" + std::to_string(rf.col) + ": " +
                                        e.what());
      throw Error(e.kind(), origin + ":" + std::to_string(rf.line) + ":" +
                                std::to_string(rf.col) + ": " + e.what());
    }
  }
  return report.text();
}

std::string Session::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrKind::Io, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_text(buf.str(), path);
}

std::string Session::deps_listing(const Symbol& spec) const {
  const DefSpecEv* s = world_.defspec(spec);
  if (!s) throw Error(ErrKind::Query, spec + " does not name a defspec");
  std::vector<Symbol> roots;
  for (const Signature& sig : s->sigs) roots.push_back(sig.fn);
  std::vector<Symbol> funs = derived_funs(world_, roots, world_.size());
  std::vector<Symbol> all = roots;
  all.insert(all.end(), funs.begin(), funs.end());
  std::vector<Symbol> thms = derived_thms(world_, all, world_.size());
  auto as_list = [](const std::vector<Symbol>& names) {
    std::vector<SExpr> items;
    for (const Symbol& n : names) items.push_back(SExpr::symbol(n));
    return show(SExpr::list(items));
  };
  return "functions: " + as_list(funs) + "\ntheorems: " + as_list(thms) + "\n";
}

std::string Session::deps_dot(const Symbol& spec) const {
  const DefSpecEv* s = world_.defspec(spec);
  if (!s) throw Error(ErrKind::Query, spec + " does not name a defspec");
  std::vector<Symbol> roots;
  for (const Signature& sig : s->sigs) roots.push_back(sig.fn);
  return dep_graph_dot(world_, roots);
}

std::string Session::pf_text(const SExpr& arg) const {
  Symbol name;
  if (arg.is_symbol()) {
    name = arg.sym();
  } else if (arg.is_pair()) {
    // (:REWRITE NAME) and friends
    auto parts = arg.proper();
    if (!parts || parts->size() != 2 || !(*parts)[1].is_symbol())
      throw Error(ErrKind::Query, ":pf expects a name");
    name = (*parts)[1].sym();
  } else {
    throw Error(ErrKind::Query, ":pf expects a name");
  }
  if (const DefThmEv* t = world_.theorem(name))
    return show(untranslate(t->formula));
  if (world_.fn_defined(name))
    return show(untranslate(defining_equation(world_, name)));
  if (world_.fn_abstract(name))
    throw Error(ErrKind::Query,
                name + " is an abstract function with no defining equation");
  throw Error(ErrKind::Query, name + " names neither a theorem nor a "
                              "defined function");
}

std::string Session::command(const Symbol& cmd, const std::string& rest) {
  if (cmd == ":DOT") {
    // The file path keeps its case: split textually, never read it.
    std::istringstream in(rest);
    std::string spec, path, extra;
    in >> spec >> path;
    if (spec.empty() || path.empty() || (in >> extra))
      throw Error(ErrKind::Query, ":dot expects a spec name and a file path");
    for (char& ch : spec)
      ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    std::string dot = deps_dot(spec);
    std::ofstream out(path);
    if (!out) throw Error(ErrKind::Io, "cannot write " + path);
    out << dot;
    return "wrote " + path + "\n";
  }

  std::vector<SExpr> args = read_all(rest);

  if (cmd == ":PF") {
    if (args.size() != 1) throw Error(ErrKind::Query, ":pf expects one name");
    return pf_text(args[0]) + "\n";
  }
  if (cmd == ":TRANS") {
    if (args.size() != 1) throw Error(ErrKind::Query, ":trans expects a form");
    return show(term_to_sexpr(translate(world_, args[0]))) + "\n";
  }
  if (cmd == ":REPLACEFNS") {
    if (args.size() != 2)
      throw Error(ErrKind::Query, ":replacefns expects pairs and terms");
    auto pairs = args[0].proper();
    if (!pairs) throw Error(ErrKind::Query, ":replacefns: bad pair list");
    FnSubst subst;
    for (const SExpr& p : *pairs) {
      auto pp = p.proper();
      if (!pp || pp->size() != 2 || !(*pp)[0].is_symbol() ||
          !(*pp)[1].is_symbol())
        throw Error(ErrKind::Query,
                    ":replacefns takes name pairs only: " + show(p));
      subst.add((*pp)[0].sym(), NameTarget{(*pp)[1].sym()});
    }
    auto terms = args[1].proper();
    if (!terms) throw Error(ErrKind::Query, ":replacefns: bad term list");
    std::vector<SExpr> results;
    for (const SExpr& t : *terms)
      results.push_back(term_to_sexpr(replacefns(subst, lenient_term(t))));
    return show(SExpr::list(results)) + "\n";
  }
  if (cmd == ":SYMBOL-LEMMAS") {
    if (args.size() != 1 || !args[0].is_symbol())
      throw Error(ErrKind::Query, ":symbol-lemmas expects a symbol");
    std::vector<SExpr> names;
    for (const Symbol& n : world_.symbol_lemmas(args[0].sym()))
      names.push_back(SExpr::symbol(n));
    return show(SExpr::list(names)) + "\n";
  }
  if (cmd == ":DEPS") {
    if (args.size() != 1 || !args[0].is_symbol())
      throw Error(ErrKind::Query, ":deps expects a spec name");
    return deps_listing(args[0].sym());
  }
  if (cmd == ":DUMP") {
    if (args.empty()) return world_.dump();
    if (!args[0].is_symbol())
      throw Error(ErrKind::Query, ":dump expects a name");
    return world_.dump(args[0].sym());
  }
  throw Error(ErrKind::Query, "unknown command: " + cmd);
}

std::string Session::submit(const std::string& input) {
  size_t start = input.find_first_not_of(" \t\r\n");
  if (start == std::string::npos) return "";
  if (input[start] == ':') {
    size_t end = start;
    while (end < input.size() &&
           !std::isspace(static_cast<unsigned char>(input[end])))
      end++;
    Symbol cmd;
    for (size_t i = start; i < end; i++)
      cmd += static_cast<char>(std::toupper(static_cast<unsigned char>(
          input[i])));
    return command(cmd, input.substr(end));
  }
  std::vector<ReadForm> forms = read_all_pos(input);
  std::string out;
  for (const ReadForm& rf : forms) {
    if (is_event_form(rf.form) ||
        (rf.form.is_pair() && rf.form.head().is_sym("SET-UNIVERSE"))) {
      Report report;
      apply_form(rf.form, &report);
      out += report.text();
    } else {
      Term t = translate(world_, rf.form);
      out += show(eval_term(world_, t, {}, universe_.fuel)) + "\n";
    }
  }
  return out;
}

}  // namespace specforge
