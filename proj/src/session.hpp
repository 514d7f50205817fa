#pragma once

#include <string>

#include "universe.hpp"
#include "world.hpp"

namespace specforge {

// One engine instance: a world threaded through event admission, the
// active universe, and the checking flags. The base world carries the
// BINARY defspec and the three fold functions.
class Session {
public:
  Session();

  // Admits a file of events; returns the report. The first failing event
  // aborts with its position in the message.
  std::string load_file(const std::string& path);
  std::string load_text(const std::string& text, const std::string& origin);

  // One REPL input: an event, a bare expression, or a colon command.
  std::string submit(const std::string& input);

  std::string deps_listing(const Symbol& spec) const;
  std::string deps_dot(const Symbol& spec) const;

  void set_fuel(long fuel);
  void set_flag(const std::string& name, bool on);  // "paranoid" | "assume"

  const World& world() const { return world_; }
  const Universe& universe() const { return universe_; }

private:
  World world_;
  Universe universe_;
  bool paranoid_ = false;
  bool assume_ = false;

  AdmitOptions options(Report* report) const;
  void apply_form(const SExpr& form, Report* report);
  std::string command(const Symbol& cmd, const std::string& rest);
  std::string pf_text(const SExpr& arg) const;
};

}  // namespace specforge
