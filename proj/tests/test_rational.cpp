#include <catch2/catch_amalgamated.hpp>

#include "domkern/rational.hpp"

using namespace domkern;

TEST_CASE("rational parsing accepts integers, decimals, and fractions") {
  CHECK(parse_rational("3") == Rational(3, 1));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("1.5") == Rational(3, 2));
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("2/4") == Rational(1, 2));
  CHECK(parse_rational("10/5") == Rational(2, 1));
  CHECK(parse_rational("0.25") == parse_rational("1/4"));
}

TEST_CASE("rational parsing rejects malformed input") {
  CHECK_THROWS_AS(parse_rational(""), invalid_input);
  CHECK_THROWS_AS(parse_rational("abc"), invalid_input);
  CHECK_THROWS_AS(parse_rational("1/0"), invalid_input);
  CHECK_THROWS_AS(parse_rational("1.2.3"), invalid_input);
  CHECK_THROWS_AS(parse_rational("/4"), invalid_input);
  CHECK_THROWS_AS(parse_rational("3/"), invalid_input);
  CHECK_THROWS_AS(parse_rational("1 2"), invalid_input);
}

TEST_CASE("rational normalization and sign") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(-1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0, 1));
  CHECK(Rational(3, 4).positive());
  CHECK_FALSE(Rational(0, 1).positive());
  CHECK_FALSE(Rational(-3, 4).positive());
  CHECK_THROWS_AS(Rational(1, 0), invalid_input);
}

TEST_CASE("ceil_mul computes exact ceilings") {
  CHECK(ceil_mul(Rational(3, 4), 10) == 8);   // 7.5 rounds up
  CHECK(ceil_mul(Rational(1, 3), 9) == 3);    // exact
  CHECK(ceil_mul(Rational(1, 3), 10) == 4);   // 3.33 rounds up
  CHECK(ceil_mul(Rational(5, 1), 2) == 10);
  CHECK(ceil_mul(Rational(7, 2), 0) == 0);
  CHECK(ceil_mul(Rational(1, 1), 1000000007ll) == 1000000007ll);
}

TEST_CASE("rational to_string is readable") {
  CHECK(to_string(Rational(3, 1)) == "3");
  CHECK(to_string(Rational(3, 4)) == "3/4");
}
