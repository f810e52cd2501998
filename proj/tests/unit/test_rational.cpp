#include "credal/rational.hpp"

#include <doctest.h>

using namespace credal;

TEST_CASE("parse_rational accepts p/q and integers") {
    CHECK(parse_rational("1/3") == Rational(1) / 3);
    CHECK(parse_rational("2/6") == Rational(1) / 3);
    CHECK(parse_rational("-5") == Rational(-5));
    CHECK(parse_rational("+7/2") == Rational(7) / 2);
    CHECK(parse_rational("0") == Rational(0));
    CHECK(parse_rational("-2/4") == Rational(-1) / 2);
}

TEST_CASE("parse_rational rejects malformed input") {
    CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("/3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1e3"), std::invalid_argument);
}

TEST_CASE("fraction strings are canonical") {
    CHECK(to_fraction_string(Rational(2) / 6) == "1/3");
    CHECK(to_fraction_string(Rational(4)) == "4");
    CHECK(to_fraction_string(Rational(-3) / 9) == "-1/3");
    CHECK(to_fraction_string(parse_rational(to_fraction_string(Rational(22) / 7))) ==
          to_fraction_string(Rational(22) / 7));
}

TEST_CASE("decimal approximations use 6 significant digits, half-even") {
    CHECK(to_decimal_string(Rational(0)) == "0");
    CHECK(to_decimal_string(Rational(1) / 3) == "0.333333");
    CHECK(to_decimal_string(Rational(2) / 3) == "0.666667");
    CHECK(to_decimal_string(Rational(1) / 2) == "0.500000");
    CHECK(to_decimal_string(Rational(1)) == "1.00000");
    CHECK(to_decimal_string(Rational(-1) / 3) == "-0.333333");
    CHECK(to_decimal_string(Rational(1) / 16) == "0.0625000");
    // exact ties round to the even neighbour
    CHECK(to_decimal_string(Rational(1234565) / 10000000) == "0.123456");
    CHECK(to_decimal_string(Rational(1234575) / 10000000) == "0.123458");
    // scientific form outside the fixed-point window
    CHECK(to_decimal_string(Rational(10000000)) == "1.00000e7");
    CHECK(to_decimal_string(Rational(1) / 100000) == "1.00000e-5");
}
