#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "specforge.h"

namespace {

std::string corpus(const char* name) {
  return std::string(SPECFORGE_CORPUS_DIR) + "/" + name;
}

struct Fixture {
  sf_session* s = sf_session_new();
  ~Fixture() { sf_session_free(s); }
};

std::string take(char* p) {
  std::string out = p ? p : "";
  sf_string_free(p);
  return out;
}

}  // namespace

TEST_CASE("load and evaluate through the C API") {
  Fixture f;
  REQUIRE(f.s != nullptr);
  char* report = nullptr;
  REQUIRE(sf_load_file(f.s, corpus("closed_monoid.gsl").c_str(), &report) ==
          SF_OK);
  std::string rep = take(report);
  CHECK(rep.find("instance INT-MONOID of MONOID recorded") !=
        std::string::npos);

  char* out = nullptr;
  REQUIRE(sf_submit(f.s, "(cons-foldr 'a '(b c))", &out) == SF_OK);
  CHECK(take(out) == "(B C . A)\n");
  REQUIRE(sf_submit(f.s, ":pf c-foldr", &out) == SF_OK);
  CHECK(take(out).find("(EQUAL (C-FOLDR X XS)") == 0);
}

TEST_CASE("status codes distinguish failure kinds") {
  Fixture f;
  char* out = nullptr;
  CHECK(sf_submit(f.s, "(defun dup (x) x)", &out) == SF_OK);
  take(out);
  CHECK(sf_submit(f.s, "(defun dup (x) x)", nullptr) == SF_ERR_ADMIT);
  CHECK(std::string(sf_last_error(f.s)).find("DUP") != std::string::npos);
  CHECK(sf_submit(f.s, "(unbalanced", nullptr) == SF_ERR_PARSE);
  CHECK(sf_submit(f.s, ":pf nowhere", nullptr) == SF_ERR_QUERY);
  CHECK(sf_load_file(f.s, "/no/such/file.gsl", nullptr) == SF_ERR_IO);
  CHECK(sf_set_fuel(f.s, -1) == SF_ERR_USAGE);
  CHECK(sf_set_flag(f.s, "mystery", 1) == SF_ERR_USAGE);
  // The session survives all of that.
  CHECK(sf_submit(f.s, "(cons 'a 'b)", &out) == SF_OK);
  CHECK(take(out) == "(A . B)\n");
}

TEST_CASE("deps and dot output") {
  Fixture f;
  char* out = nullptr;
  REQUIRE(sf_deps(f.s, "binary", &out) == SF_OK);
  std::string listing = take(out);
  CHECK(listing.find("functions: (FOLDR FOLDR1 FOLDL)") != std::string::npos);
  REQUIRE(sf_deps_dot(f.s, "binary", &out) == SF_OK);
  CHECK(take(out).find("digraph deps {") == 0);
  CHECK(sf_deps(f.s, "no-such-spec", nullptr) == SF_ERR_QUERY);
}

TEST_CASE("flags reach the engine") {
  Fixture f;
  REQUIRE(sf_set_flag(f.s, "assume", 1) == SF_OK);
  CHECK(sf_submit(f.s, "(defthm bogus (equal (cons x y) (cons y x)))",
                  nullptr) == SF_OK);
  Fixture strict;
  CHECK(sf_submit(strict.s, "(defthm bogus (equal (cons x y) (cons y x)))",
                  nullptr) == SF_ERR_ADMIT);
}

TEST_CASE("input completeness helper") {
  CHECK(sf_input_complete("(a b)") == 1);
  CHECK(sf_input_complete("(a (b)") == 0);
  CHECK(sf_input_complete(nullptr) == 0);
}

TEST_CASE("null-safety and version") {
  CHECK(sf_load_file(nullptr, "x", nullptr) == SF_ERR_USAGE);
  CHECK(sf_submit(nullptr, "x", nullptr) == SF_ERR_USAGE);
  CHECK(std::string(sf_version()) == "0.1.0");
}
