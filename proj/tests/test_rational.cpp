#include <doctest.h>

#include "adejac/rational.hpp"

using adejac::Rational;

TEST_CASE("rationals normalise and compare exactly")
{
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(7, 3) > Rational(2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) * Rational(3, 5) == Rational(1, 5));
    CHECK(Rational(1, 3) / Rational(2, 3) == Rational(1, 2));
    CHECK(Rational(5, 3).str() == "5/3");
    CHECK(Rational(6, 3).str() == "2");
}

TEST_CASE("integer ceilings never touch floating point")
{
    CHECK(Rational(4, 3).ceil() == 2);
    CHECK(Rational(8, 3).ceil() == 3);
    CHECK(Rational(6, 3).ceil() == 2);
    CHECK(Rational(-1, 3).ceil() == 0);
    CHECK(Rational(-4, 3).ceil() == -1);
    CHECK(Rational(0).ceil() == 0);
}

TEST_CASE("zero denominators are rejected")
{
    CHECK_THROWS_AS(Rational(1, 0), adejac::DomainError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), adejac::DomainError);
}
