#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mbstar/errors.hpp"
#include "mbstar/formula.hpp"
#include "testutil.hpp"

using namespace mbstar;
using mbstar::testing::F;

TEST_CASE("parse builds the tree dictated by precedence and associativity") {
  Formula p = Formula::var("p"), q = Formula::var("q");

  CHECK(F("p -> (q -> p)") == Formula::imp(p, Formula::imp(q, p)));
  // -> is right-associative, so the parens above are redundant.
  CHECK(F("p -> q -> p") == Formula::imp(p, Formula::imp(q, p)));

  CHECK(F("p | ~p | #p") ==
        Formula::disj(Formula::disj(p, Formula::neg(p)), Formula::undet(p)));

  CHECK(F("~(p | ~p) -> #p") ==
        Formula::imp(Formula::neg(Formula::disj(p, Formula::neg(p))), Formula::undet(p)));

  CHECK(F("p & q | r") == Formula::disj(Formula::conj(p, q), Formula::var("r")));
  CHECK(F("~#~p") == Formula::neg(Formula::undet(Formula::neg(p))));
  CHECK(F("  p ->q ") == F("p -> q"));
  CHECK(F("p // trailing comment") == p);
  CHECK(F("alpha_1 & b2") == Formula::conj(Formula::var("alpha_1"), Formula::var("b2")));
}

TEST_CASE("parse errors carry a byte offset and the expected tokens") {
  CHECK_THROWS_AS(F("p | ("), ParseError);
  try {
    F("p | (");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 5);
    CHECK(!e.expected().empty());
  }
  try {
    F("p q");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
    CHECK(e.found() == "'q'");
  }
  CHECK_THROWS_AS(F(""), ParseError);
  CHECK_THROWS_AS(F("p ->"), ParseError);
  CHECK_THROWS_AS(F("p - q"), ParseError);
  CHECK_THROWS_AS(F("(p"), ParseError);
  CHECK_THROWS_AS(F("1p"), ParseError);
}

TEST_CASE("render uses minimal parentheses") {
  Formula p = Formula::var("p"), q = Formula::var("q"), r = Formula::var("r");

  CHECK(render(Formula::disj(Formula::disj(p, Formula::neg(p)), Formula::undet(p))) ==
        "p | ~p | #p");
  CHECK(render(Formula::imp(p, Formula::imp(q, p))) == "p -> q -> p");
  CHECK(render(Formula::neg(Formula::neg(p))) == "~~p");

  CHECK(render(Formula::disj(p, Formula::disj(q, r))) == "p | (q | r)");
  CHECK(render(Formula::imp(Formula::imp(p, q), r)) == "(p -> q) -> r");
  CHECK(render(Formula::neg(Formula::disj(p, q))) == "~(p | q)");
  CHECK(render(Formula::conj(Formula::disj(p, q), r)) == "(p | q) & r");
  CHECK(render(F("(p & q) | r")) == "p & q | r");
}

TEST_CASE("parse after render is the identity on random trees") {
  mbstar::testing::Rng rng(20240811);
  for (int i = 0; i < 300; ++i) {
    Formula f = mbstar::testing::random_formula(rng, 5);
    CHECK(parse_formula(render(f)) == f);
  }
}

TEST_CASE("substitute replaces homomorphically at the leaves") {
  Formula p = Formula::var("p"), q = Formula::var("q"), r = Formula::var("r");

  Binding to_qr{{"p", Formula::conj(q, r)}};
  CHECK(substitute(F("p -> p"), to_qr) == F("q & r -> (q & r)"));
  CHECK(substitute(p, {}) == p);
  CHECK(substitute(Formula::undet(p), {{"p", Formula::neg(q)}}) ==
        Formula::undet(Formula::neg(q)));
  // Unbound variables map to themselves.
  CHECK(substitute(F("p & q"), to_qr) == Formula::conj(Formula::conj(q, r), q));
}

TEST_CASE("substitute distributes over the six node kinds and respects identity") {
  mbstar::testing::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    Formula a = mbstar::testing::random_formula(rng, 3);
    Formula b = mbstar::testing::random_formula(rng, 3);
    Binding sigma{{"p", mbstar::testing::random_formula(rng, 2)},
                  {"q", mbstar::testing::random_formula(rng, 2)}};

    CHECK(substitute(Formula::conj(a, b), sigma) ==
          Formula::conj(substitute(a, sigma), substitute(b, sigma)));
    CHECK(substitute(Formula::disj(a, b), sigma) ==
          Formula::disj(substitute(a, sigma), substitute(b, sigma)));
    CHECK(substitute(Formula::imp(a, b), sigma) ==
          Formula::imp(substitute(a, sigma), substitute(b, sigma)));
    CHECK(substitute(Formula::neg(a), sigma) == Formula::neg(substitute(a, sigma)));
    CHECK(substitute(Formula::undet(a), sigma) == Formula::undet(substitute(a, sigma)));
    CHECK(substitute(a, {}) == a);
  }
}

TEST_CASE("subformulas lists children before parents, deduplicated") {
  FormulaSet s = subformulas(F("p | ~p"));
  REQUIRE(s.size() == 3);
  CHECK(s[0] == F("p"));
  CHECK(s[1] == F("~p"));
  CHECK(s[2] == F("p | ~p"));

  s = subformulas(F("#p"));
  REQUIRE(s.size() == 2);
  CHECK(s[0] == F("p"));
  CHECK(s[1] == F("#p"));

  s = subformulas(F("~~p"));
  REQUIRE(s.size() == 3);
  CHECK(s[0] == F("p"));
  CHECK(s[1] == F("~p"));
  CHECK(s[2] == F("~~p"));

  // Shared subtrees appear once.
  CHECK(subformulas(F("p & p")).size() == 2);
}

TEST_CASE("formula sets deduplicate under syntactic identity, keep insertion order") {
  FormulaSet s;
  CHECK(s.insert(F("p | q")));
  CHECK(!s.insert(F("p|q")));
  CHECK(s.insert(F("q | p")));  // different formula, no normalization
  CHECK(s.size() == 2);
  CHECK(s[0] == F("p | q"));
  CHECK(s.without(F("p | q")).size() == 1);
}

TEST_CASE("structural order ranks by connective, then contents") {
  CHECK(Formula::compare(F("p"), F("~p")) < 0);
  CHECK(Formula::compare(F("~p"), F("#p")) < 0);
  CHECK(Formula::compare(F("~p"), F("~~p")) < 0);
  CHECK(Formula::compare(F("p & q"), F("p | q")) < 0);
  CHECK(Formula::compare(F("p"), F("p")) == 0);
  CHECK(Formula::compare(F("q"), F("p")) > 0);
}
