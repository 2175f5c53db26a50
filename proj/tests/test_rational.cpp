#include <catch2/catch_amalgamated.hpp>

#include <boost/integer/common_factor.hpp>

#include "clausen/rational.hpp"

using namespace clausen;

TEST_CASE("parse accepts the p/q wire format") {
    CHECK(parse_rational("3/2") == Rational(3, 2));
    CHECK(parse_rational("-3/2") == Rational(-3, 2));
    CHECK(parse_rational("5") == Rational(5));
    CHECK(parse_rational("-5") == Rational(-5));
    CHECK(parse_rational("0") == Rational(0));
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK(parse_rational("-10/4") == Rational(-5, 2));
}

TEST_CASE("parse rejects malformed literals") {
    for (const char* bad : {"", "3/", "/2", "1/0", "+3", "3.5", "a", "1/2/3", "--2", "2/-3", " 1"}) {
        INFO(bad);
        CHECK_THROWS_AS(parse_rational(bad), invalid_instance);
    }
}

TEST_CASE("printing matches the wire format, q omitted when 1") {
    CHECK(to_string(Rational(3, 2)) == "3/2");
    CHECK(to_string(Rational(-3, 2)) == "-3/2");
    CHECK(to_string(Rational(5)) == "5");
    CHECK(to_string(Rational(0)) == "0");
    CHECK(to_string(Rational(4, 6)) == "2/3");
    CHECK(to_string(parse_rational("-121/11")) == "-11");
}

TEST_CASE("canonical form invariants hold after arithmetic") {
    // Walk a pseudo-random arithmetic chain and re-check canonicality.
    Rational r(1, 3);
    const Rational steps[] = {Rational(7, 5), Rational(-2, 9), Rational(4), Rational(-1, 8)};
    for (int i = 0; i < 64; ++i) {
        const Rational& s = steps[i % 4];
        switch (i % 3) {
            case 0: r += s; break;
            case 1: r *= s; break;
            case 2: r -= s * r / 2; break;
        }
        CAPTURE(i, to_string(r));
        CHECK(denominator(r) > 0);
        CHECK(boost::integer::gcd(numerator(r), denominator(r)) == 1);
    }
    CHECK(to_string(Rational(0)) == "0");
    CHECK(denominator(Rational(0)) == 1);
}

TEST_CASE("integer classification helpers") {
    CHECK(is_integer(parse_rational("4/2")));
    CHECK_FALSE(is_integer(Rational(1, 2)));
    CHECK(is_nonpositive_integer(Rational(0)));
    CHECK(is_nonpositive_integer(Rational(-7)));
    CHECK_FALSE(is_nonpositive_integer(Rational(3)));
    CHECK_FALSE(is_nonpositive_integer(Rational(-1, 2)));
    CHECK(is_negative_integer(Rational(-1)));
    CHECK_FALSE(is_negative_integer(Rational(0)));
    CHECK(to_long_long(Rational(-12)) == -12);
    CHECK_THROWS_AS(to_long_long(Rational(1, 2)), invalid_instance);
}

TEST_CASE("conversion to long double is faithful") {
    CHECK(to_real(Rational(1, 3)) == Catch::Approx(1.0L / 3.0L).epsilon(1e-18));
    CHECK(to_real(Rational(-7, 2)) == -3.5L);
    // Big numerator/denominator still convert with long double accuracy.
    Integer big = 1;
    for (int i = 2; i <= 30; ++i) big *= i;
    const Rational huge(big, big + 1);
    CHECK(std::abs(to_real(huge) - 1.0L) < 1e-18L);
}
