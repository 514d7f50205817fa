#include "doctest.h"

#include "bigint.hpp"
#include "error.hpp"
#include "support.hpp"

using namespace specforge;
using tsup::rd;

TEST_CASE("reading dotted pairs") {
  SExpr v = rd("(b c . a)");
  REQUIRE(v.is_pair());
  CHECK(v.head().sym() == "B");
  CHECK(v.tail().head().sym() == "C");
  CHECK(v.tail().tail().sym() == "A");
  CHECK(show(v) == "(B C . A)");
}

TEST_CASE("empty list reads as NIL") {
  CHECK(rd("()").is_nil());
  CHECK(show(rd("()")) == "NIL");
}

TEST_CASE("quote sugar") {
  SExpr v = rd("'(a b)");
  REQUIRE(v.is_pair());
  CHECK(v.head().sym() == "QUOTE");
  CHECK(show(v) == "'(A B)");
  CHECK(show(rd("'x")) == "'X");
}

TEST_CASE("cons-foldl value prints with a dotted tail") {
  SExpr a = SExpr::symbol("A"), b = SExpr::symbol("B"), c = SExpr::symbol("C");
  CHECK(show(SExpr::cons(SExpr::cons(a, b), c)) == "((A . B) . C)");
}

TEST_CASE("case normalization and integers") {
  CHECK(rd("abc").sym() == "ABC");
  CHECK(rd("-1").num() == BigInt(-1));
  CHECK(rd("+17").num() == BigInt(17));
  CHECK(show(rd("123456789012345678901234567890")) ==
        "123456789012345678901234567890");
}

TEST_CASE("comments are skipped") {
  auto forms = read_all("; heading\n(a ; mid\n b)\n");
  REQUIRE(forms.size() == 1);
  CHECK(show(forms[0]) == "(A B)");
}

TEST_CASE("read/show round-trip over generated values") {
  tsup::Rng rng(20240711);
  for (int i = 0; i < 1000; i++) {
    SExpr v = tsup::random_sexpr(rng);
    CHECK(rd(show(v)) == v);
  }
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(read_all("(a b"), ParseError);
  CHECK_THROWS_AS(read_all(")"), ParseError);
  CHECK_THROWS_AS(read_all("(. a)"), ParseError);
  CHECK_THROWS_AS(read_all("(a . b c)"), ParseError);
  CHECK_THROWS_AS(read_all("(a .)"), ParseError);
  CHECK_THROWS_AS(read_all("."), ParseError);
  CHECK_THROWS_AS(read_all("3x"), ParseError);
  CHECK_THROWS_AS(read_all("1.5"), ParseError);
  try {
    read_all("(a\n  b");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("input completeness for the REPL") {
  CHECK(input_complete("(a b)"));
  CHECK(!input_complete("(a (b"));
  CHECK(input_complete("(a) ; ("));
  CHECK(input_complete("x"));
}

TEST_CASE("big integer arithmetic") {
  CHECK(BigInt::parse("999999999999999999") + BigInt(1) ==
        BigInt::parse("1000000000000000000"));
  CHECK(BigInt(-5) + BigInt(3) == BigInt(-2));
  CHECK(BigInt(5) + BigInt(-5) == BigInt(0));
  CHECK((-BigInt(7)).str() == "-7");
  CHECK(BigInt::parse("-0") == BigInt(0));
  CHECK(BigInt(-10) < BigInt(-9));
  CHECK(BigInt::parse("100000000000000000000") <
        BigInt::parse("100000000000000000001"));
  tsup::Rng rng(7);
  for (int i = 0; i < 200; i++) {
    long long a = rng.below(2000001) - 1000000;
    long long b = rng.below(2000001) - 1000000;
    CHECK(BigInt(a) + BigInt(b) == BigInt(a + b));
  }
}
