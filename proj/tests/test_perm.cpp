#include <vector>

#include "doctest.h"
#include "formations/perm.hpp"

using namespace formations;

TEST_CASE("cycle parsing produces the expected image vectors") {
  CHECK(parse_permutation("(1 2 3)", 5).one_based_images() == std::vector<int>{2, 3, 1, 4, 5});
  CHECK(parse_permutation("()", 3).one_based_images() == std::vector<int>{1, 2, 3});
  CHECK(parse_permutation("(1 2)(3 4)", 4).one_based_images() == std::vector<int>{2, 1, 4, 3});
  // comma separators are accepted too
  CHECK(parse_permutation("(1,2,3)", 3) == parse_permutation("(1 2 3)", 3));
}

TEST_CASE("cycle parsing rejects malformed input") {
  CHECK_THROWS_AS(parse_permutation("(1 2", 4), ParseError);
  CHECK_THROWS_AS(parse_permutation("(1 2)(2 3)", 4), ParseError);  // repeated point
  CHECK_THROWS_AS(parse_permutation("(1 5)", 4), ParseError);       // out of range
  CHECK_THROWS_AS(parse_permutation("(0 1)", 4), ParseError);
  CHECK_THROWS_AS(parse_permutation("abc", 4), ParseError);
  CHECK_THROWS_AS(parse_permutation("(1 2) junk", 4), ParseError);
}

TEST_CASE("parse errors carry the offending offset") {
  try {
    parse_permutation("(1 x)", 4);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position == 3);
  }
}

TEST_CASE("composition is left to right") {
  auto a = parse_permutation("(1 2)", 3);
  auto b = parse_permutation("(2 3)", 3);
  // apply a first: 1 -> 2 -> 3
  CHECK((a * b).apply(0) == 2);
  CHECK((a * b) == parse_permutation("(1 3 2)", 3));
  CHECK((b * a) == parse_permutation("(1 2 3)", 3));
}

TEST_CASE("inverse and identity behave") {
  auto p = parse_permutation("(1 2 3)(4 5)", 6);
  CHECK((p * p.inverse()).is_identity());
  CHECK((p.inverse() * p).is_identity());
  CHECK(Permutation(4).is_identity());
  CHECK(p.inverse() == parse_permutation("(1 3 2)(4 5)", 6));
}

TEST_CASE("element order is the lcm of cycle lengths") {
  CHECK(parse_permutation("(1 2 3)(4 5)", 6).order() == 6);
  CHECK(parse_permutation("(1 2 3 4)", 4).order() == 4);
  CHECK(Permutation(7).order() == 1);
}

TEST_CASE("conjugate and commutator match their definitions") {
  auto a = parse_permutation("(1 2 3)", 4);
  auto g = parse_permutation("(3 4)", 4);
  CHECK(conjugate(a, g) == g.inverse() * a * g);
  CHECK(conjugate(a, g) == parse_permutation("(1 2 4)", 4));
  auto b = parse_permutation("(1 2)", 4);
  CHECK(commutator(a, b) == a.inverse() * b.inverse() * a * b);
  CHECK(commutator(a, a).is_identity());
}

TEST_CASE("cycle_string round trips through the parser") {
  const char* samples[] = {"(1 2 3)(4 5)", "()", "(1 4)(2 5)(3 6)", "(2 3 4 5 6)"};
  for (const char* s : samples) {
    auto p = parse_permutation(s, 6);
    CHECK(parse_permutation(p.cycle_string(), 6) == p);
  }
  CHECK(Permutation(3).cycle_string() == "()");
  CHECK(parse_permutation("(1 2 3)", 5).cycle_string() == "(1 2 3)");
}

TEST_CASE("one-based construction matches the parser") {
  CHECK(Permutation::from_one_based({2, 3, 1, 4, 5}) == parse_permutation("(1 2 3)", 5));
  CHECK_THROWS_AS(Permutation::from_one_based({1, 1, 3}), DomainError);
  CHECK_THROWS_AS(Permutation::from_one_based({0, 1}), DomainError);
}
