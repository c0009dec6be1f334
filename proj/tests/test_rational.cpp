#include "rational.hpp"

#include "errors.hpp"

#include <doctest.h>

using namespace rshare;

TEST_CASE("fraction_str is always p/q in lowest terms") {
    CHECK(fraction_str(Rational(5, 3)) == "5/3");
    CHECK(fraction_str(Rational(2, 4)) == "1/2");
    CHECK(fraction_str(Rational(3)) == "3/1");
    CHECK(fraction_str(Rational(0)) == "0/1");
    CHECK(fraction_str(Rational(-3, 6)) == "-1/2");
}

TEST_CASE("parse_fraction round-trips fraction_str") {
    for (auto r : {Rational(5, 3), Rational(49, 45), Rational(0), Rational(-7, 2),
                   Rational(1), Rational(367, 280)}) {
        CHECK(parse_fraction(fraction_str(r)) == r);
    }
    CHECK(parse_fraction("7") == Rational(7));
    CHECK(parse_fraction("-4/6") == Rational(-2, 3));
    CHECK_THROWS_AS(parse_fraction("x"), InvalidInput);
    CHECK_THROWS_AS(parse_fraction("1/0"), InvalidInput);
    CHECK_THROWS_AS(parse_fraction("1/-2"), InvalidInput);
    CHECK_THROWS_AS(parse_fraction(""), InvalidInput);
}

TEST_CASE("decimal_str renders 12 significant digits") {
    CHECK(decimal_str(Rational(5, 3)) == "1.66666666667");
    CHECK(decimal_str(Rational(1, 2)) == "0.500000000000");
    CHECK(decimal_str(Rational(1)) == "1.00000000000");
    CHECK(decimal_str(Rational(1, 6)) == "0.166666666667");
    CHECK(decimal_str(Rational(10, 9)) == "1.11111111111");
    CHECK(decimal_str(Rational(0)) == "0");
    CHECK(decimal_str(Rational(-5, 3)) == "-1.66666666667");
}

TEST_CASE("decimal_str handles magnitudes away from 1") {
    CHECK(decimal_str(Rational(1, 20), 1) == "0.05");
    CHECK(decimal_str(Rational(1, 1000000)) == "0.00000100000000000");
    BigInt big = boost::multiprecision::pow(BigInt(10), 14);
    CHECK(decimal_str(Rational(big)) == "100000000000000");
}

TEST_CASE("decimal_str rounds half to even") {
    CHECK(decimal_str(Rational(3, 2), 1) == "2");
    CHECK(decimal_str(Rational(5, 2), 1) == "2");
    CHECK(decimal_str(Rational(7, 2), 1) == "4");
    CHECK(decimal_str(Rational(25, 100), 1) == "0.2");
    CHECK(decimal_str(Rational(75, 100), 1) == "0.8");
    // carry into a new leading digit
    CHECK(decimal_str(Rational(9999999999999, 10000000000000), 12) == "1.00000000000");
    // ...but round-half-even keeps an even last digit without the carry
    CHECK(decimal_str(Rational(200000000001, 200000000000), 12) == "1.00000000000");
    CHECK(decimal_str(Rational(200000000003, 200000000000), 12) == "1.00000000002");
}

TEST_CASE("decimal_str custom significand widths") {
    CHECK(decimal_str(Rational(1, 3), 4) == "0.3333");
    CHECK(decimal_str(Rational(2, 3), 4) == "0.6667");
    CHECK(decimal_str(Rational(1234, 1), 2) == "1200");
    CHECK_THROWS_AS(decimal_str(Rational(1), 0), InvalidInput);
}
