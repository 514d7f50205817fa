#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "subst.hpp"
#include "term.hpp"
#include "universe.hpp"

namespace specforge {

struct Signature {
  Symbol fn;
  std::vector<Symbol> formals;
};

// Theorem metadata: :REWRITE, :TYPE-PRESCRIPTION or :FORWARD-CHAINING,
// possibly with attribute terms (:TYPED-TERM, :TRIGGER-TERMS).
struct RuleClass {
  Symbol kind;
  std::vector<std::pair<Symbol, Terms>> attrs;
};

// Provenance of a copied theorem: where it came from, under which
// substitution, and the instance record that discharged the obligations.
struct Justification {
  Symbol origin;
  FnSubst subst;
  Symbol obligation;
};

struct DefUnEv {
  Symbol name;
  std::vector<Symbol> formals;
  Term body;
  std::optional<std::string> doc;
};

struct DefThmEv {
  Symbol name;
  Term formula;
  std::vector<RuleClass> classes;  // defaults to ((:REWRITE))
  std::optional<Justification> just;
};

struct DefConstEv {
  Symbol name;  // asterisk-wrapped
  SExpr value;
};

// The admitted record of a specification. Local witness events are checked
// during admission and then dropped: they never enter the visible world.
struct DefSpecEv {
  Symbol name;
  std::vector<Signature> sigs;
  std::vector<Symbol> constraint_names;  // exported theorems, in order
};

// Record of a discharged instantiation.
struct InstanceEv {
  Symbol spec;
  Symbol name;
  FnSubst subst;
};

using Event = std::variant<DefUnEv, DefThmEv, DefConstEv, DefSpecEv, InstanceEv>;

const Symbol& event_name(const Event& e);
const char* event_kind(const Event& e);

struct FnInfo {
  std::vector<Symbol> formals;
  std::optional<Term> body;  // nullopt: abstract (defspec signature function)
  std::size_t ordinal = 0;
  std::optional<std::string> doc;

  bool operator==(const FnInfo& o) const = default;
};

struct Report {
  std::vector<std::string> lines;
  void add(std::string line) { lines.push_back(std::move(line)); }
  std::string text() const;
};

struct AdmitOptions {
  const Universe* universe = nullptr;  // null: default universe
  bool assume = false;                 // admit theorems unchecked
  bool paranoid = false;               // re-check executable copied theorems
  Report* report = nullptr;
};

// The ordered logical world. Values are persistent: admit returns a new
// world and never mutates its input.
class World {
public:
  World() = default;

  std::size_t size() const { return events_.size(); }
  const Event& event(std::size_t ordinal) const { return *events_[ordinal]; }

  bool has_name(const Symbol& name) const;
  std::size_t decode_logical_name(const Symbol& name) const;

  const FnInfo* fn_info(const Symbol& name) const;
  bool fn_defined(const Symbol& name) const;   // has a visible body
  bool fn_abstract(const Symbol& name) const;  // signature function

  const DefThmEv* theorem(const Symbol& name) const;
  // Throws unless `name` names a theorem.
  const DefThmEv& theorem_of(const Symbol& name) const;

  const DefSpecEv* defspec(const Symbol& name) const;
  const SExpr* constant(const Symbol& name) const;

  // All theorem names whose formula or class attributes mention `sym`
  // anywhere, in world order. Backed by the mention index.
  std::vector<Symbol> symbol_lemmas(const Symbol& sym) const;

  // Theorem names in admission order.
  std::vector<Symbol> theorem_names() const;

  // Transitively executable: defined, and every callee executable.
  bool fn_executable(const Symbol& name) const;

  // True when the incremental indices equal ones rebuilt from the event
  // list alone.
  bool indices_consistent() const;

  // Debug rendering of one event (or all) in landmark style.
  std::string dump(const std::optional<Symbol>& name = std::nullopt) const;

  friend World admit(const World& w, Event e, const AdmitOptions& opts);

private:
  struct Indices {
    std::unordered_map<Symbol, std::size_t> position;  // every admitted name
    std::unordered_map<Symbol, FnInfo> fns;
    std::unordered_map<Symbol, std::size_t> thms;
    std::unordered_map<Symbol, std::size_t> specs;
    std::unordered_map<Symbol, std::size_t> consts;
    std::unordered_map<Symbol, std::vector<Symbol>> thm_mentions;

    void index_event(const Event& e, std::size_t ordinal);
    bool operator==(const Indices& o) const;
  };

  std::vector<std::shared_ptr<const Event>> events_;
  Indices ix_;
};

World admit(const World& w, Event e, const AdmitOptions& opts = {});

// Validates that every head in `t` is a builtin, a known function with
// matching arity, or the (optional) self function; that variables are not
// T/NIL; and that lambda applications are well-formed.
void validate_term(const World& w, const Term& t, const Symbol* self_name,
                   std::size_t self_arity);

}  // namespace specforge
