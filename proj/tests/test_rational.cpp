#include <doctest.h>

#include "covnet/rational.hpp"

using covnet::parse_rational;
using covnet::Rational;
using covnet::rational_to_string;

TEST_CASE("parse_rational accepts integers and fractions") {
  CHECK(parse_rational("0") == 0);
  CHECK(parse_rational("42") == 42);
  CHECK(parse_rational("-7") == -7);
  CHECK(parse_rational("+5") == 5);
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("2/-4") == Rational(-1, 2));
  CHECK(parse_rational("123456789012345678901234567890/3") ==
        Rational(covnet::Integer("41152263004115226300411522630")));
}

TEST_CASE("parse_rational rejects malformed input") {
  for (const char* bad : {"", " 1", "1 ", "1.5", "a", "1/", "/2", "1//2",
                          "1/2/3", "0x10", "1e3", "--1"})
    CHECK_THROWS_AS(parse_rational(bad), covnet::ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), covnet::ParseError);
  CHECK_THROWS_AS(parse_rational("0/0"), covnet::ParseError);
}

TEST_CASE("rational_to_string emits canonical form") {
  CHECK(rational_to_string(Rational(0)) == "0");
  CHECK(rational_to_string(Rational(17)) == "17");
  CHECK(rational_to_string(Rational(-3)) == "-3");
  CHECK(rational_to_string(Rational(7, 2)) == "7/2");
  CHECK(rational_to_string(Rational(-3, 2)) == "-3/2");
  CHECK(rational_to_string(Rational(4, 2)) == "2");
  CHECK(rational_to_string(parse_rational("10/15")) == "2/3");
}

TEST_CASE("round trip through text is the identity") {
  for (const char* text : {"0", "1", "-1", "3/7", "-22/7", "1000000007"}) {
    CHECK(rational_to_string(parse_rational(text)) == text);
  }
}

TEST_CASE("arithmetic is exact") {
  Rational third(1, 3);
  CHECK(third + third + third == 1);
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 10) * 10 == 1);
  CHECK(covnet::is_integer(Rational(8, 4)));
  CHECK(!covnet::is_integer(Rational(8, 3)));
}
