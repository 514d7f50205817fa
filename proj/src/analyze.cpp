#include "analyze.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace specforge {

std::vector<Symbol> derived_funs(const World& w,
                                 const std::vector<Symbol>& roots,
                                 std::size_t upto) {
  std::set<Symbol> reached(roots.begin(), roots.end());
  std::vector<std::pair<std::size_t, Symbol>> found;
  upto = std::min(upto, w.size());

  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < upto; i++) {
      const auto* d = std::get_if<DefUnEv>(&w.event(i));
      if (!d || reached.count(d->name)) continue;
      for (const Symbol& callee : fns_called(d->body)) {
        if (reached.count(callee)) {
          reached.insert(d->name);
          found.emplace_back(i, d->name);
          grew = true;
          break;
        }
      }
    }
  }

  std::sort(found.begin(), found.end());
  std::vector<Symbol> out;
  for (auto& [ord, name] : found) out.push_back(std::move(name));
  return out;
}

namespace {

bool thm_calls_any(const DefThmEv& t, const std::set<Symbol>& fns) {
  for (const Symbol& f : fns_called(t.formula))
    if (fns.count(f)) return true;
  for (const RuleClass& rc : t.classes)
    for (const auto& [attr, terms] : rc.attrs)
      for (const Term& tm : terms)
        for (const Symbol& f : fns_called(tm))
          if (fns.count(f)) return true;
  return false;
}

}  // namespace

std::vector<Symbol> derived_thms(const World& w,
                                 const std::vector<Symbol>& fns,
                                 std::size_t upto) {
  std::set<Symbol> fnset(fns.begin(), fns.end());
  std::vector<Symbol> out;
  upto = std::min(upto, w.size());
  for (std::size_t i = 0; i < upto; i++) {
    const auto* t = std::get_if<DefThmEv>(&w.event(i));
    if (t && thm_calls_any(*t, fnset)) out.push_back(t->name);
  }
  return out;
}

std::string dep_graph_dot(const World& w, const std::vector<Symbol>& roots) {
  std::vector<Symbol> nodes;
  for (const Symbol& r : roots)
    if (std::find(nodes.begin(), nodes.end(), r) == nodes.end())
      nodes.push_back(r);
  for (const Symbol& f : derived_funs(w, roots, w.size()))
    nodes.push_back(f);
  std::set<Symbol> nodeset(nodes.begin(), nodes.end());

  std::ostringstream out;
  out << "digraph deps {\n";
  for (const Symbol& n : nodes) out << "  \"" << n << "\";\n";
  for (const Symbol& n : nodes) {
    const FnInfo* fi = w.fn_info(n);
    if (!fi || !fi->body) continue;
    std::set<Symbol> emitted;
    for (const Symbol& callee : fns_called(*fi->body)) {
      if (!nodeset.count(callee) || !emitted.insert(callee).second) continue;
      out << "  \"" << n << "\" -> \"" << callee << "\";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace specforge
