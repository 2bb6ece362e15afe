#include "doctest.h"

#include <random>

#include "stirlingcf/rational.hpp"

using namespace stirlingcf;

TEST_CASE("construction reduces and keeps the denominator positive") {
    Rational r(6, -8);
    CHECK(r.num() == -3);
    CHECK(r.den() == 4);
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational(0, 5).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("arithmetic stays reduced with positive denominator") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> dist(-50, 50);
    for (int i = 0; i < 500; ++i) {
        long a = dist(rng), b = dist(rng), c = dist(rng), d = dist(rng);
        if (b == 0 || d == 0) continue;
        Rational x(a, b), y(c, d);
        for (const Rational& r : {x + y, x - y, x * y}) {
            CHECK(r.den() > 0);
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
            CHECK(g == 1);
        }
        if (!y.is_zero()) {
            Rational q = x / y;
            CHECK(q.den() > 0);
            CHECK(q * y == x);
        }
    }
}

TEST_CASE("comparisons are exact") {
    CHECK(Rational(1, 3) < Rational(34, 100));
    CHECK(Rational(9, 326) > Rational(4, 145));
    CHECK(Rational(2, 4) == Rational(1, 2));
}

TEST_CASE("parse and str round-trip the canonical form") {
    CHECK(Rational::parse("1/12").str() == "1/12");
    CHECK(Rational::parse("-6/4").str() == "-3/2");
    CHECK(Rational::parse("7").str() == "7");
    CHECK(Rational::parse("-0") == Rational(0));
    CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
    CHECK_THROWS_AS(Rational::parse("1.5"), DomainError);
    CHECK_THROWS_AS(Rational::parse(""), DomainError);
    CHECK_THROWS_AS(Rational::parse("5/"), DomainError);
}

TEST_CASE("directed decimal rendering never crosses the exact value") {
    Rational third(1, 3);
    CHECK(third.decimal(4, RoundDir::Down) == "0.3333");
    CHECK(third.decimal(4, RoundDir::Up) == "0.3334");
    Rational neg(-1, 3);
    CHECK(neg.decimal(4, RoundDir::Down) == "-0.3334");
    CHECK(neg.decimal(4, RoundDir::Up) == "-0.3333");
    CHECK(Rational(1, 2).decimal(2, RoundDir::Down) == "0.50");
    CHECK(Rational(1, 2).decimal(2, RoundDir::Up) == "0.50");
    CHECK(Rational(5).decimal(0, RoundDir::Down) == "5");
    CHECK(Rational(1, 13).decimal(6, RoundDir::Down) == "0.076923");
}

TEST_CASE("reciprocal and pow") {
    CHECK(Rational(3, 7).reciprocal() == Rational(7, 3));
    CHECK_THROWS_AS(Rational(0).reciprocal(), DomainError);
    CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
    CHECK(Rational(5, 2).pow(0) == Rational(1));
}

TEST_CASE("pow10_inv") {
    CHECK(pow10_inv(3) == Rational(1, 1000));
    CHECK(pow10_inv(0) == Rational(1));
}
