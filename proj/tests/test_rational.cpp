#include "nwvoa/rational.hpp"

#include <doctest.h>

using namespace nwvoa;

TEST_CASE("rationals normalize through common factors") {
    // a/b built from (ka, kb) equals a/b
    for (long a = -7; a <= 7; ++a) {
        for (long b = 1; b <= 5; ++b) {
            for (long k = 1; k <= 4; ++k) {
                CHECK(Rational(Int(k * a), Int(k * b)) == Rational(Int(a), Int(b)));
                CHECK(Rational(Int(-k * a), Int(-k * b)) == Rational(Int(a), Int(b)));
            }
        }
    }
    CHECK(Rational(Int(4), Int(-6)) == Rational(Int(-2), Int(3)));
    CHECK(Rational(0, 17) == Rational(0));
}

TEST_CASE("arithmetic is exact") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK((-a).num() == Int(-1));
    CHECK_THROWS_AS(a / Rational(0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(Int(1), Int(0)), std::invalid_argument);
}

TEST_CASE("ordering, floor and fractional part") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-7, 2).floor() == Int(-4));
    CHECK(Rational(7, 2).floor() == Int(3));
    CHECK(Rational(-7, 2).frac() == Rational(1, 2));
    CHECK(Rational(5).frac() == Rational(0));
    CHECK(Rational(5).is_integer());
    CHECK(!Rational(5, 3).is_integer());
}

TEST_CASE("string round trips use canonical p/q form") {
    CHECK(Rational(3, 4).str() == "3/4");
    CHECK(Rational(-3, 4).str() == "-3/4");
    CHECK(Rational(5).str() == "5");
    for (auto s : {"3/4", "-12", "0", "22/7"}) CHECK(Rational::parse(s).str() == s);
    CHECK(Rational::parse("4/8").str() == "1/2");
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("binomial handles negative tops") {
    CHECK(binomial(Int(5), 2) == Int(10));
    CHECK(binomial(Int(0), 0) == Int(1));
    CHECK(binomial(Int(1), 2) == Int(0));
    CHECK(binomial(Int(-1), 3) == Int(-1));
    CHECK(binomial(Int(-2), 2) == Int(3));
    CHECK(binomial(Int(-3), 1) == Int(-3));
}
