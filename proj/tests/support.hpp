#pragma once

#include <random>
#include <string>
#include <vector>

#include "reader.hpp"
#include "session.hpp"
#include "translate.hpp"
#include "world.hpp"

namespace tsup {

using namespace specforge;

inline std::string corpus_path(const std::string& name) {
  return std::string(SPECFORGE_CORPUS_DIR) + "/" + name;
}

// Shared sessions; loading the corpus once keeps the suites quick.
inline Session& base_session() {
  static Session s;
  return s;
}

inline Session& corpus_session() {
  static Session s = [] {
    Session t;
    t.load_file(corpus_path("closed_monoid.gsl"));
    return t;
  }();
  return s;
}

inline Session& members_session() {
  static Session s = [] {
    Session t;
    t.load_file(corpus_path("members.gsl"));
    return t;
  }();
  return s;
}

inline SExpr rd(const std::string& text) { return read_one(text); }

inline Term tr(const World& w, const std::string& text) {
  return translate(w, read_one(text));
}

// Prints a term in its raw stored form.
inline std::string raw(const Term& t) { return show(term_to_sexpr(t)); }

struct Rng {
  std::mt19937 gen;
  explicit Rng(unsigned seed) : gen(seed) {}
  int below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(gen); }
};

inline SExpr random_sexpr(Rng& rng, int depth = 4) {
  static const std::vector<std::string> syms = {"NIL", "T",   "A",  "B",
                                                "FOO", "BAR", "XS", "X"};
  int pick = rng.below(depth <= 0 ? 2 : 3);
  switch (pick) {
    case 0: return SExpr::symbol(syms[rng.below(syms.size())]);
    case 1: return SExpr::integer(rng.below(2001) - 1000);
    default:
      return SExpr::cons(random_sexpr(rng, depth - 1),
                         random_sexpr(rng, depth - 1));
  }
}

// Random core terms over two unary/binary function names, suited to the
// replacefns swap tests.
inline Term random_term(Rng& rng, int depth = 4) {
  static const std::vector<std::string> vars = {"X", "Y", "J", "FOO", "BAR"};
  int pick = rng.below(depth <= 0 ? 2 : 4);
  switch (pick) {
    case 0: return Term::var(vars[rng.below(vars.size())]);
    case 1: return Term::quote(random_sexpr(rng, 2));
    case 2: {
      Symbol fn = rng.below(2) ? "FOO" : "BAR";
      Terms args{random_term(rng, depth - 1), random_term(rng, depth - 1)};
      return Term::app(fn, std::move(args));
    }
    default: {
      std::vector<Symbol> params{"FOO", "J"};
      Terms args{random_term(rng, depth - 1), random_term(rng, depth - 1)};
      return Term::lambda_app(std::move(params), random_term(rng, depth - 1),
                              std::move(args));
    }
  }
}

// Random proper list over the given atoms.
inline SExpr random_list(Rng& rng, const std::vector<SExpr>& atoms,
                         int max_len) {
  int len = rng.below(max_len + 1);
  std::vector<SExpr> elems;
  for (int i = 0; i < len; i++) elems.push_back(atoms[rng.below(atoms.size())]);
  return SExpr::list(elems);
}

}  // namespace tsup
