#include "doctest.h"

#include <set>
#include <sstream>

#include "analyze.hpp"
#include "support.hpp"

using namespace specforge;

TEST_CASE("derived_funs finds the folds from binary-function") {
  const World& w = tsup::base_session().world();
  auto funs = derived_funs(w, {"BINARY-FUNCTION"}, w.size());
  CHECK(funs == std::vector<Symbol>{"FOLDR", "FOLDR1", "FOLDL"});
}

TEST_CASE("derived_funs after the corpus instantiations") {
  const World& w = tsup::corpus_session().world();
  auto funs = derived_funs(w, {"C-DOMAINP", "C-BINARY-FUNCTION"}, w.size());
  std::set<Symbol> got(funs.begin(), funs.end());
  CHECK(got.count("C-FOLDR"));
  CHECK(got.count("C-FOLDR1"));
  CHECK(got.count("C-FOLDL"));
  CHECK(got.count("LIST-DOMAINP"));
  CHECK(!got.count("SG-C-FOLDR"));
  CHECK(!got.count("FOLDR"));
}

TEST_CASE("roots with no dependents derive nothing") {
  Session s;
  s.submit("(defspec lonely ((lonely-fn (x) t))"
           "  (local (defun lonely-fn (x) x)))");
  auto funs = derived_funs(s.world(), {"LONELY-FN"}, s.world().size());
  CHECK(funs.empty());
}

TEST_CASE("upto hides later definitions") {
  const World& w = tsup::base_session().world();
  std::size_t foldr1_at = w.decode_logical_name("FOLDR1");
  auto funs = derived_funs(w, {"BINARY-FUNCTION"}, foldr1_at);
  CHECK(funs == std::vector<Symbol>{"FOLDR"});
}

TEST_CASE("closure and minimality of the fixpoint") {
  const World& w = tsup::corpus_session().world();
  std::vector<Symbol> roots{"SG-C-DOMAINP", "SG-C-BINARY-FUNCTION"};
  auto funs = derived_funs(w, roots, w.size());
  std::set<Symbol> members(funs.begin(), funs.end());
  members.insert(roots.begin(), roots.end());

  // Closure: nothing outside the set calls into it.
  for (std::size_t i = 0; i < w.size(); i++) {
    const auto* d = std::get_if<DefUnEv>(&w.event(i));
    if (!d || members.count(d->name)) continue;
    for (const Symbol& f : fns_called(d->body)) CHECK(!members.count(f));
  }

  // Minimality: every derived function reaches a root through the graph.
  for (const Symbol& f : funs) {
    std::set<Symbol> seen;
    std::vector<Symbol> work{f};
    bool reached = false;
    while (!work.empty() && !reached) {
      Symbol cur = work.back();
      work.pop_back();
      if (!seen.insert(cur).second) continue;
      const FnInfo* fi = w.fn_info(cur);
      if (!fi || !fi->body) continue;
      for (const Symbol& g : fns_called(*fi->body)) {
        if (std::find(roots.begin(), roots.end(), g) != roots.end())
          reached = true;
        if (members.count(g)) work.push_back(g);
      }
    }
    CHECK(reached);
  }
}

namespace {

std::vector<Symbol> scan_derived_thms(const World& w,
                                      const std::vector<Symbol>& fns,
                                      std::size_t upto) {
  std::set<Symbol> fnset(fns.begin(), fns.end());
  std::vector<Symbol> out;
  for (std::size_t i = 0; i < upto; i++) {
    const auto* t = std::get_if<DefThmEv>(&w.event(i));
    if (!t) continue;
    bool hit = false;
    for (const Symbol& f : fns_called(t->formula))
      if (fnset.count(f)) hit = true;
    for (const RuleClass& rc : t->classes)
      for (const auto& [attr, terms] : rc.attrs)
        for (const Term& tm : terms)
          for (const Symbol& f : fns_called(tm))
            if (fnset.count(f)) hit = true;
    if (hit) out.push_back(t->name);
  }
  return out;
}

}  // namespace

TEST_CASE("derived_thms equals the naive scan") {
  const World& w = tsup::corpus_session().world();
  std::vector<Symbol> fns{"C-DOMAINP", "C-BINARY-FUNCTION", "C-FOLDR",
                          "C-FOLDR1", "C-FOLDL", "LIST-DOMAINP"};
  auto thms = derived_thms(w, fns, w.size());
  CHECK(thms == scan_derived_thms(w, fns, w.size()));
  CHECK(std::find(thms.begin(), thms.end(), "FOLDR1-CLOSED") != thms.end());
  CHECK(derived_thms(w, {}, w.size()).empty());
}

TEST_CASE("dependency graph in DOT form") {
  const World& w = tsup::base_session().world();
  std::string dot = dep_graph_dot(w, {"BINARY-FUNCTION"});
  CHECK(dot.find("digraph deps {") != std::string::npos);
  CHECK(dot.find("\"FOLDR\" -> \"BINARY-FUNCTION\";") != std::string::npos);
  CHECK(dot.find("\"FOLDR\" -> \"FOLDR\";") != std::string::npos);

  Session lonely;
  lonely.submit("(defspec lonely ((lonely-fn (x) t))"
                "  (local (defun lonely-fn (x) x)))");
  std::string only = dep_graph_dot(lonely.world(), {"LONELY-FN"});
  CHECK(only.find("\"LONELY-FN\";") != std::string::npos);
  CHECK(only.find("->") == std::string::npos);
}

TEST_CASE("DOT edges equal a body-walk oracle") {
  const World& w = tsup::corpus_session().world();
  std::vector<Symbol> roots{"C-DOMAINP", "C-BINARY-FUNCTION"};
  std::string dot = dep_graph_dot(w, roots);

  std::vector<Symbol> nodes = roots;
  for (const Symbol& f : derived_funs(w, roots, w.size())) nodes.push_back(f);
  std::set<Symbol> nodeset(nodes.begin(), nodes.end());
  std::set<std::string> expected;
  for (const Symbol& n : nodes) {
    const FnInfo* fi = w.fn_info(n);
    if (!fi || !fi->body) continue;
    for (const Symbol& callee : fns_called(*fi->body))
      if (nodeset.count(callee))
        expected.insert("  \"" + n + "\" -> \"" + callee + "\";");
  }
  std::set<std::string> got;
  std::istringstream lines(dot);
  std::string line;
  while (std::getline(lines, line))
    if (line.find("->") != std::string::npos) got.insert(line);
  CHECK(got == expected);
}
