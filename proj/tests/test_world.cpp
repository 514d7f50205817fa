#include "doctest.h"

#include <set>

#include "builtins.hpp"
#include "error.hpp"
#include "events.hpp"
#include "support.hpp"

using namespace specforge;
using tsup::raw;

TEST_CASE("the base world stores foldr as the paper defines it") {
  const World& w = tsup::base_session().world();
  const FnInfo* fi = w.fn_info("FOLDR");
  REQUIRE(fi != nullptr);
  CHECK(fi->formals == std::vector<Symbol>{"X", "XS"});
  REQUIRE(fi->body.has_value());
  CHECK(raw(*fi->body) ==
        "(IF (ATOM XS) X (BINARY-FUNCTION (CAR XS) (FOLDR X (CDR XS))))");
}

TEST_CASE("event names are unique across the world") {
  Session s;
  s.submit("(defun foo (x) x)");
  CHECK_THROWS_WITH_AS(s.submit("(defun foo (x y) (cons x y))"),
                       "name already in use: FOO", Error);
  CHECK_THROWS_AS(s.submit("(defthm foo (equal x x))"), Error);
  CHECK_THROWS_AS(s.submit("(defun cons (x) x)"), Error);
}

TEST_CASE("theorem admission checks find counterexamples") {
  Session s;
  try {
    s.submit("(defthm cons-commutes (equal (cons x y) (cons y x)))");
    FAIL("expected a counterexample");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrKind::Admit);
    // First failing assignment: variables alphabetical, values in
    // universe order, so X = NIL, Y = T.
    CHECK(std::string(e.what()).find("X = NIL, Y = T") != std::string::npos);
  }
  CHECK(!s.world().has_name("CONS-COMMUTES"));
}

TEST_CASE("decode_logical_name") {
  const World& w = tsup::base_session().world();
  CHECK(w.decode_logical_name("BINARY") < w.decode_logical_name("FOLDR"));
  CHECK(w.decode_logical_name("BINARY-FUNCTION") ==
        w.decode_logical_name("BINARY"));
  CHECK(w.decode_logical_name("FOLDR") < w.decode_logical_name("FOLDR1"));
  CHECK_THROWS_AS(w.decode_logical_name("NO-SUCH"), Error);
}

TEST_CASE("theorem_of returns the stored formula and classes") {
  const World& w = tsup::corpus_session().world();
  const DefThmEv& t = w.theorem_of("FOLDR1-CLOSED");
  CHECK(raw(t.formula) ==
        "(IMPLIES (IF (LIST-DOMAINP XS) (CONSP XS) 'NIL)"
        " (C-DOMAINP (C-FOLDR1 XS)))");
  REQUIRE(t.classes.size() == 1);
  CHECK(t.classes[0].kind == ":REWRITE");  // default class
  CHECK_THROWS_AS(w.theorem_of("FOLDR"), Error);
  CHECK_THROWS_AS(w.theorem_of("NO-SUCH"), Error);
}

namespace {

// Naive full-scan oracle for the mention index.
std::vector<Symbol> scan_symbol_lemmas(const World& w, const Symbol& sym) {
  std::vector<Symbol> out;
  for (std::size_t i = 0; i < w.size(); i++) {
    const auto* t = std::get_if<DefThmEv>(&w.event(i));
    if (!t) continue;
    std::vector<Symbol> mentioned;
    collect_symbols(t->formula, mentioned);
    for (const RuleClass& rc : t->classes)
      for (const auto& [attr, terms] : rc.attrs)
        for (const Term& tm : terms) collect_symbols(tm, mentioned);
    for (const Symbol& m : mentioned)
      if (m == sym) {
        out.push_back(t->name);
        break;
      }
  }
  return out;
}

}  // namespace

TEST_CASE("symbol_lemmas matches a naive scan") {
  const World& w = tsup::corpus_session().world();
  auto lemmas = w.symbol_lemmas("C-FOLDR1");
  CHECK(std::find(lemmas.begin(), lemmas.end(), "FOLDR1-CLOSED") !=
        lemmas.end());
  auto sg = w.symbol_lemmas("SG-C-FOLDR1");
  CHECK(std::find(sg.begin(), sg.end(), "SG-FOLDR1-CLOSED") != sg.end());
  CHECK(w.symbol_lemmas("NEVER-MENTIONED").empty());

  std::set<Symbol> every;
  for (std::size_t i = 0; i < w.size(); i++) {
    if (const auto* t = std::get_if<DefThmEv>(&w.event(i))) {
      std::vector<Symbol> ms;
      collect_symbols(t->formula, ms);
      every.insert(ms.begin(), ms.end());
    }
  }
  every.insert("FOLDR");
  every.insert("NEVER-MENTIONED");
  for (const Symbol& sym : every)
    CHECK(w.symbol_lemmas(sym) == scan_symbol_lemmas(w, sym));
}

TEST_CASE("worlds are persistent values") {
  Session s;
  const World before = s.world();
  std::size_t n = before.size();
  s.submit("(defun extra (x) x)");
  CHECK(before.size() == n);
  CHECK(!before.has_name("EXTRA"));
  CHECK(s.world().has_name("EXTRA"));
}

TEST_CASE("incremental indices equal rebuilt indices") {
  CHECK(tsup::base_session().world().indices_consistent());
  CHECK(tsup::corpus_session().world().indices_consistent());
  CHECK(tsup::members_session().world().indices_consistent());
}

TEST_CASE("bodies only reference earlier or self ordinals") {
  const World& w = tsup::corpus_session().world();
  for (std::size_t i = 0; i < w.size(); i++) {
    const auto* d = std::get_if<DefUnEv>(&w.event(i));
    if (!d) continue;
    for (const Symbol& f : fns_called(d->body)) {
      if (is_builtin_fn(f)) continue;
      CHECK(w.decode_logical_name(f) <= i);
    }
  }
}

TEST_CASE("defconst names must be asterisk-wrapped") {
  Session s;
  CHECK_THROWS_AS(s.submit("(defconst monoid-renaming '((a b)))"), Error);
  s.submit("(defconst *r* '((a b)))");
  CHECK(s.world().constant("*R*") != nullptr);
}

TEST_CASE("the world dump echoes landmark shapes and hides witnesses") {
  const World& w = tsup::corpus_session().world();
  std::string all = w.dump();
  CHECK(all.find("EVENT-LANDMARK GLOBAL-VALUE") != std::string::npos);
  CHECK(all.find("DEFINSTANCE CLOSED-BINOP SG-CLOSED-BINOP") !=
        std::string::npos);
  std::string spec_dump = w.dump(Symbol("CLOSED-BINOP"));
  CHECK(spec_dump.find("ENCAPSULATE") != std::string::npos);
  CHECK(spec_dump.find("C-DOMAINP") != std::string::npos);
  // The witness implementations never appear.
  CHECK(spec_dump.find("INTEGERP") == std::string::npos);
  CHECK(spec_dump.find("+") == std::string::npos);
  std::string thm_dump = w.dump(Symbol("FOLDR1-CLOSED"));
  CHECK(thm_dump.find("(FOLDR1-CLOSED THEOREM (IMPLIES (IF (LIST-DOMAINP XS)"
                      " (CONSP XS) 'NIL) (C-DOMAINP (C-FOLDR1 XS))))") !=
        std::string::npos);
  CHECK(thm_dump.find("(FOLDR1-CLOSED CLASSES (:REWRITE))") !=
        std::string::npos);
}
