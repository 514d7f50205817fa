// Acceptance suite: prints one pass/fail line per criterion and exits
// nonzero if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"
#include "eval.hpp"
#include "reader.hpp"
#include "session.hpp"
#include "translate.hpp"

using namespace specforge;

namespace {

std::string corpus(const char* name) {
  return std::string(SPECFORGE_CORPUS_DIR) + "/" + name;
}

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

std::string squeeze(const std::string& s) {
  std::string out;
  bool space = false;
  for (char c : s) {
    if (c == ' ' || c == '\n' || c == '\t') {
      space = true;
      continue;
    }
    if (space && !out.empty()) out += ' ';
    space = false;
    out += c;
  }
  return out;
}

Session& corpus_session() {
  static Session s = [] {
    Session t;
    t.load_file(corpus("closed_monoid.gsl"));
    return t;
  }();
  return s;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

// ---- criteria ----

void corpus_replay() {
  auto start = std::chrono::steady_clock::now();
  Session s;
  std::string report = s.load_file(corpus("closed_monoid.gsl"));
  double elapsed = seconds_since(start);
  require(report.find("instance INT-MONOID of MONOID recorded") !=
              std::string::npos,
          "final instantiation missing from the report");
  require(elapsed < 10.0,
          "load took " + std::to_string(elapsed) + "s (limit 10s)");
}

void transcript_exactness() {
  Session& s = corpus_session();
  require(s.submit("(cons-foldr 'a '(b c))") == "(B C . A)\n",
          "cons-foldr payload mismatch");
  require(s.submit("(cons-foldr1 '(a b c))") == "(A B . C)\n",
          "cons-foldr1 payload mismatch");
  require(s.submit("(cons-foldl 'a '(b c))") == "((A . B) . C)\n",
          "cons-foldl payload mismatch");
}

void pf_output() {
  Session& s = corpus_session();
  std::string expect_c_foldr =
      "(EQUAL (C-FOLDR X XS)"
      "       (IF (CONSP XS)"
      "           (C-BINARY-FUNCTION (CAR XS)"
      "                              (C-FOLDR X (CDR XS)))"
      "           X))";
  require(squeeze(s.submit(":pf c-foldr")) == squeeze(expect_c_foldr),
          ":pf c-foldr differs from the transcript");
  require(corpus_session().world().theorem("SG-FOLDR1-CLOSED") != nullptr,
          "SG-FOLDR1-CLOSED missing");
  std::string expect_sg =
      "(IMPLIES (AND (SG-LIST-DOMAINP XS) (CONSP XS))"
      "         (SG-C-DOMAINP (SG-C-FOLDR1 XS)))";
  require(squeeze(s.submit(":pf (:rewrite sg-foldr1-closed)")) ==
              squeeze(expect_sg),
          ":pf sg-foldr1-closed differs from the transcript");
}

void is_a_expansion() {
  const World& w = corpus_session().world();
  const DefThmEv* t = w.theorem("SEMIGROUP-IS-A-CLOSED-BINOP-0");
  require(t != nullptr, "SEMIGROUP-IS-A-CLOSED-BINOP-0 missing");
  std::string got = show(term_to_sexpr(t->formula));
  std::string expect =
      "(IMPLIES (IF (SG-C-DOMAINP X) (SG-C-DOMAINP Y) 'NIL)"
      " (SG-C-DOMAINP (SG-C-BINARY-FUNCTION X Y)))";
  require(squeeze(got) == squeeze(expect),
          "stored formula differs: " + got);
}

void replacefns_golden() {
  Session s;
  std::string out = s.submit(
      ":replacefns ((foo bar) (bar foo))"
      " ((+ ((lambda (foo j) (foo foo j)) x y) (bar x y)))");
  require(out == "((+ ((LAMBDA (FOO J) (BAR FOO J)) X Y) (FOO X Y)))\n",
          "replacefns output differs: " + out);
}

void copyfun_validation() {
  Session s;
  try {
    s.load_file(corpus("../tests/data/copyfun_error.gsl"));
    throw Failure("mismatched lambda was accepted");
  } catch (const Error& e) {
    std::string msg = e.what();
    require(msg.find("COPYFUN") != std::string::npos, "not a COPYFUN error");
    require(msg.find("(XS)") != std::string::npos,
            "error does not name (XS): " + msg);
    require(msg.find("(LST)") != std::string::npos,
            "error does not name the expected formals (LST): " + msg);
  }
}

void subset_oracle() {
  auto start = std::chrono::steady_clock::now();
  Session s;
  s.load_file(corpus("members.gsl"));
  const World& w = s.world();
  Term call = Term::app("SUBSET-EQUAL", {Term::var("LST"), Term::var("Y")});

  auto enumerate = [](const std::vector<SExpr>& atoms) {
    std::vector<std::vector<SExpr>> lists{{}};
    std::vector<std::vector<SExpr>> frontier{{}};
    for (int len = 1; len <= 3; len++) {
      std::vector<std::vector<SExpr>> next;
      for (const auto& prefix : frontier)
        for (const SExpr& a : atoms) {
          auto l = prefix;
          l.push_back(a);
          next.push_back(l);
          lists.push_back(l);
        }
      frontier = std::move(next);
    }
    return lists;
  };
  auto subset_brute = [](const std::vector<SExpr>& xs,
                         const std::vector<SExpr>& ys) {
    for (const SExpr& x : xs) {
      bool found = false;
      for (const SExpr& y : ys)
        if (x == y) found = true;
      if (!found) return false;
    }
    return true;
  };

  long pairs = 0;
  for (const char* atom_text : {"A B C", "A B C 0 1 2"}) {
    auto lists = enumerate(read_all(atom_text));
    for (const auto& xs : lists) {
      for (const auto& ys : lists) {
        Env env{{"LST", SExpr::list(xs)}, {"Y", SExpr::list(ys)}};
        bool got = eval_term(w, call, env, 10000).truthy();
        if (got != subset_brute(xs, ys))
          throw Failure("disagreement at LST=" + show(SExpr::list(xs)) +
                        " Y=" + show(SExpr::list(ys)));
        pairs++;
      }
    }
  }
  double elapsed = seconds_since(start);
  require(pairs >= 216 * 216,
          "only " + std::to_string(pairs) + " pairs enumerated");
  require(elapsed < 5.0,
          "oracle comparison took " + std::to_string(elapsed) + "s");
}

void commutation() {
  Session& s = corpus_session();
  const World& w = s.world();
  Session ms;
  ms.load_file(corpus("members.gsl"));
  const World& mw = ms.world();

  std::mt19937 gen(20120917);
  std::vector<SExpr> atoms = read_all("A B C 0 1 2");
  auto pick = [&](int n) {
    return std::uniform_int_distribution<int>(0, n - 1)(gen);
  };
  auto rand_list = [&](int max_len) {
    std::vector<SExpr> elems;
    int len = pick(max_len + 1);
    for (int i = 0; i < len; i++) elems.push_back(atoms[pick(atoms.size())]);
    return SExpr::list(elems);
  };

  FnBind cons_bind{{"BINARY-FUNCTION", NameTarget{"CONS"}}};
  FnBind member_bind{
      {"PREDICATE",
       LambdaTarget{{"X"}, translate(mw, read_one("(member-equal x y)"))}}};
  int mismatches = 0, runs = 0;
  for (int i = 0; i < 250; i++) {
    SExpr x = atoms[pick(atoms.size())];
    SExpr xs = rand_list(6);
    Env env{{"X", x}, {"XS", xs}};
    struct Pair {
      const char* original;
      const char* copy;
      bool unary;
    };
    for (const Pair& p : {Pair{"FOLDR", "CONS-FOLDR", false},
                          Pair{"FOLDR1", "CONS-FOLDR1", true},
                          Pair{"FOLDL", "CONS-FOLDL", false}}) {
      Terms args = p.unary ? Terms{Term::var("XS")}
                           : Terms{Term::var("X"), Term::var("XS")};
      SExpr a = eval_with_bindings(w, Term::app(p.original, args), env,
                                   cons_bind, 10000);
      SExpr b = eval_term(w, Term::app(p.copy, args), env, 10000);
      runs++;
      if (!(a == b)) mismatches++;
    }
    SExpr lst = rand_list(4), y = rand_list(4);
    Env menv{{"LST", lst}, {"Y", y}};
    SExpr a = eval_with_bindings(
        mw, Term::app("PREDICATE-LISTP", {Term::var("LST")}), menv,
        member_bind, 10000);
    SExpr b = eval_term(
        mw, Term::app("SUBSET-EQUAL", {Term::var("LST"), Term::var("Y")}),
        menv, 10000);
    runs++;
    if (!(a == b)) mismatches++;
  }
  require(runs >= 1000, "only " + std::to_string(runs) + " comparisons ran");
  require(mismatches == 0,
          std::to_string(mismatches) + " discrepancies out of " +
              std::to_string(runs));
}

void paranoid_mode() {
  Session s;
  s.set_flag("paranoid", true);
  std::string report = s.load_file(corpus("closed_monoid.gsl"));
  require(report.find("(paranoid check: pass)") != std::string::npos,
          "no copied theorem was re-checked");
  require(report.find("paranoid re-check") == std::string::npos,
          "unexpected paranoid failure marker");
}

void skip_feature() {
  Session s;
  s.load_file(corpus("closed_monoid.gsl"));
  s.submit(
      "(instance-of-defspec closed-binop intc"
      "  '((c-domainp integerp) (c-binary-function +) (foldr1-closed)))");
  const World& w = s.world();
  require(w.theorem("INTC-FOLDR1-CLOSED") == nullptr,
          "the skipped theorem was copied");
  require(w.theorem("INTC-CLOSED-BINOP-CLOSED") != nullptr,
          "a non-skipped theorem is missing");
  for (const char* fn :
       {"INTC-C-FOLDR", "INTC-C-FOLDR1", "INTC-C-FOLDL", "INTC-LIST-DOMAINP"})
    require(w.fn_defined(fn), std::string(fn) + " missing");
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    std::function<void()> run;
  };
  std::vector<Criterion> criteria = {
      {"1. corpus replay: binary -> folds -> cons -> closed-binop -> "
       "semigroup -> monoid, zero errors, under 10 s",
       corpus_replay},
      {"2. transcript exactness: cons-foldr/foldr1/foldl payloads",
       transcript_exactness},
      {"3. :pf c-foldr and SG-FOLDR1-CLOSED match the transcripts",
       pf_output},
      {"4. is-a expansion: SEMIGROUP-IS-A-CLOSED-BINOP-0 stored body",
       is_a_expansion},
      {"5. replacefns golden swap", replacefns_golden},
      {"6. COPYFUN validation names (XS) and (LST)", copyfun_validation},
      {"7. SUBSET-EQUAL agrees with the brute-force subset oracle",
       subset_oracle},
      {"8. instantiation/evaluation commute on 1000 randomized inputs",
       commutation},
      {"9. paranoid mode re-checks copied theorems with zero failures",
       paranoid_mode},
      {"10. singleton rename entries skip exactly that theorem",
       skip_feature},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    try {
      c.run();
      std::cout << "PASS  " << c.label << "\n";
    } catch (const std::exception& e) {
      failures++;
      std::cout << "FAIL  " << c.label << "\n      " << e.what() << "\n";
    }
  }
  if (failures) std::cout << failures << " criterion(s) failed\n";
  return failures == 0 ? 0 : 1;
}
