// Command-line front end. Links only the public C API.

#include <iostream>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "specforge.h"

namespace {

struct SessionHandle {
  sf_session *s = nullptr;
  SessionHandle() : s(sf_session_new()) {}
  ~SessionHandle() { sf_session_free(s); }
  SessionHandle(const SessionHandle&) = delete;
  SessionHandle& operator=(const SessionHandle&) = delete;
};

struct OwnedString {
  char *p = nullptr;
  ~OwnedString() { sf_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

int apply_options(sf_session *s, long fuel, bool paranoid, bool assume) {
  if (fuel > 0 && sf_set_fuel(s, fuel) != SF_OK) {
    std::cerr << "error: " << sf_last_error(s) << "\n";
    return SF_ERR_USAGE;
  }
  sf_set_flag(s, "paranoid", paranoid ? 1 : 0);
  sf_set_flag(s, "assume", assume ? 1 : 0);
  return SF_OK;
}

int load_files(sf_session *s, const std::vector<std::string>& files,
               bool quiet) {
  for (const std::string& f : files) {
    OwnedString report;
    sf_status st = sf_load_file(s, f.c_str(), &report.p);
    if (st != SF_OK) {
      std::cerr << "error: " << sf_last_error(s) << "\n";
      return st;
    }
    if (!quiet) std::cout << report.str();
  }
  return SF_OK;
}

int run_repl(sf_session *s) {
  std::string pending;
  for (;;) {
    std::cout << (pending.empty() ? "specforge !> " : "            > ")
              << std::flush;
    std::string line;
    if (!std::getline(std::cin, line)) break;
    pending += line;
    pending += '\n';
    if (!sf_input_complete(pending.c_str())) continue;
    std::string input = pending;
    pending.clear();
    // Trim for the quit check.
    size_t b = input.find_first_not_of(" \t\n");
    if (b == std::string::npos) continue;
    size_t e = input.find_last_not_of(" \t\n");
    std::string trimmed = input.substr(b, e - b + 1);
    if (trimmed == ":q" || trimmed == ":quit" || trimmed == ":Q" ||
        trimmed == ":QUIT")
      break;
    OwnedString out;
    sf_status st = sf_submit(s, input.c_str(), &out.p);
    if (st != SF_OK)
      std::cerr << "error: " << sf_last_error(s) << "\n";
    else
      std::cout << out.str();
  }
  std::cout << "\n";
  return SF_OK;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"specforge: abstract specification engine"};
  app.require_subcommand(1);

  long fuel = 0;
  bool paranoid = false, assume = false;
  std::string file, spec, dot_out;
  std::vector<std::string> repl_files;

  auto add_common = [&](CLI::App *cmd) {
    cmd->add_option("--fuel", fuel, "evaluation step budget");
    cmd->add_flag("--paranoid", paranoid,
                  "re-check every executable copied theorem");
    cmd->add_flag("--assume", assume, "admit theorems unchecked");
  };

  CLI::App *load = app.add_subcommand("load", "admit a file of events");
  load->add_option("file", file, "source file (.gsl)")->required();
  add_common(load);

  CLI::App *repl = app.add_subcommand("repl", "interactive session");
  repl->add_option("files", repl_files, "files to load first");
  add_common(repl);

  CLI::App *deps = app.add_subcommand(
      "deps", "derived functions and theorems of a spec");
  deps->add_option("file", file, "source file (.gsl)")->required();
  deps->add_option("spec", spec, "defspec name")->required();
  deps->add_option("--dot", dot_out, "write the dependency graph here");
  add_common(deps);

  CLI11_PARSE(app, argc, argv);

  SessionHandle session;
  if (!session.s) {
    std::cerr << "error: cannot initialize engine\n";
    return SF_ERR_INTERNAL;
  }
  int st = apply_options(session.s, fuel, paranoid, assume);
  if (st != SF_OK) return st;

  if (load->parsed()) {
    return load_files(session.s, {file}, false);
  }

  if (repl->parsed()) {
    int rc = load_files(session.s, repl_files, false);
    if (rc != SF_OK) return rc;
    return run_repl(session.s);
  }

  if (deps->parsed()) {
    int rc = load_files(session.s, {file}, true);
    if (rc != SF_OK) return rc;
    OwnedString listing;
    sf_status ds = sf_deps(session.s, spec.c_str(), &listing.p);
    if (ds != SF_OK) {
      std::cerr << "error: " << sf_last_error(session.s) << "\n";
      return ds;
    }
    std::cout << listing.str();
    if (!dot_out.empty()) {
      OwnedString dot;
      ds = sf_deps_dot(session.s, spec.c_str(), &dot.p);
      if (ds != SF_OK) {
        std::cerr << "error: " << sf_last_error(session.s) << "\n";
        return ds;
      }
      std::ofstream out(dot_out);
      if (!out) {
        std::cerr << "error: cannot write " << dot_out << "\n";
        return SF_ERR_IO;
      }
      out << dot.str();
      std::cout << "wrote " << dot_out << "\n";
    }
    return SF_OK;
  }

  return SF_ERR_USAGE;
}
