#include "doctest.h"

#include <string>

#include "stirlingcf/binet.hpp"

using namespace stirlingcf;

namespace {

// Exact rational from a decimal literal (used for frozen reference digits).
Rational rat_from_decimal(const std::string& s) {
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rational::parse(s);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    unsigned long places = s.size() - dot - 1;
    return Rational::parse(digits) * pow10_inv(places);
}

// (3/2) ln 2 - 1 and 1 - ln sqrt(2 pi), truncated at 30 places.
const Rational kEps1Lo = rat_from_decimal("0.039720770839917964125848182187");
const Rational kEps1Hi = kEps1Lo + pow10_inv(30);
const Rational kR1Lo = rat_from_decimal("0.081061466795327258219670263594");
const Rational kR1Hi = kR1Lo + pow10_inv(30);

} // namespace

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(3) == Rational(0));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(12) == Rational(-691, 2730));
    CHECK(bernoulli(20) == Rational(-174611, 330));
    CHECK_THROWS_AS(bernoulli(-1), PreconditionError);
}

TEST_CASE("stirling series coefficients") {
    CHECK(stirling_coeff(1) == Rational(1, 12));
    CHECK(stirling_coeff(2) == Rational(-1, 360));
    CHECK(stirling_coeff(3) == Rational(1, 1260));
    CHECK(stirling_coeff(4) == Rational(-1, 1680));
    CHECK(stirling_coeff(8) == Rational(-3617, 122400));
    for (int i = 1; i <= 20; ++i)
        CHECK(stirling_coeff(i).sign() == (i % 2 == 1 ? 1 : -1));
}

TEST_CASE("epsilon enclosure basics") {
    // One-term truncation: lo = y^2/3 = 1/27 at p = 1.
    Interval coarse = epsilon_interval(1, Rational(1));
    CHECK(coarse.lo == Rational(1, 27));
    CHECK(coarse.lo > Rational(0));

    Interval tight = epsilon_interval(1, pow10_inv(20));
    CHECK(tight.width() <= pow10_inv(20));
    CHECK(tight.lo <= kEps1Hi);
    CHECK(tight.hi >= kEps1Lo);

    CHECK_THROWS_AS(epsilon_interval(0, Rational(1)), PreconditionError);
    CHECK_THROWS_AS(epsilon_interval(1, Rational(0)), PreconditionError);
}

TEST_CASE("epsilon is strictly decreasing in p") {
    const Rational w = pow10_inv(20);
    Interval prev = epsilon_interval(1, w);
    for (long p = 2; p <= 100; ++p) {
        Interval cur = epsilon_interval(p, w);
        CHECK(cur.hi < prev.lo);
        prev = cur;
    }
}

TEST_CASE("stirling brackets") {
    Interval b = stirling_bracket(10, 1);
    CHECK(b.hi == Rational(1, 120));
    CHECK(b.lo == Rational(1, 120) - Rational(1, 360) * pow10_inv(3));

    // The asymptotic series first narrows, then diverges.
    BracketScan scan = stirling_bracket_scan(1);
    CHECK(scan.best_N >= 1);
    CHECK(stirling_bracket(1, scan.best_N + 4).width() > scan.best.width());
    CHECK(scan.best.contains(Interval(kR1Lo, kR1Hi)));
}

TEST_CASE("binet enclosure hits the closed-form r_1") {
    Interval r1 = binet_interval(1, pow10_inv(30));
    CHECK(r1.width() <= pow10_inv(30));
    CHECK(r1.lo <= kR1Hi);
    CHECK(r1.hi >= kR1Lo);
}

TEST_CASE("binet enclosure sits strictly inside the robbins bracket") {
    for (long n : {1, 2, 7, 10, 50, 100}) {
        Interval rn = binet_interval(n, pow10_inv(20));
        Interval rb = robbins_bracket(n);
        CHECK(rn.lo > rb.lo);
        CHECK(rn.hi < rb.hi);
    }
}

TEST_CASE("tighter targets nest") {
    Interval w5 = binet_interval(3, pow10_inv(5));
    Interval w10 = binet_interval(3, pow10_inv(10));
    Interval w20 = binet_interval(3, pow10_inv(20));
    CHECK(w5.contains(w10));
    CHECK(w10.contains(w20));
}

TEST_CASE("binet enclosure intersects stirling brackets up to the minimum") {
    for (long n : {1, 5, 10}) {
        Interval rn = binet_interval(n, pow10_inv(20));
        BracketScan scan = stirling_bracket_scan(n);
        for (int N = 1; N <= scan.best_N; ++N)
            CHECK(rn.intersects(stirling_bracket(n, N)));
        // Containment in the tightest bracket only makes sense while that
        // bracket is at least as wide as the enclosure; past n ~ 9 the
        // minimal bracket dips below 1e-20 and intersection is the check.
        if (scan.best.width() >= rn.width())
            CHECK(scan.best.contains(rn));
        else
            CHECK(scan.best.intersects(rn));
    }
}

TEST_CASE("resource cap raises with the best enclosure attached") {
    try {
        binet_interval(1, pow10_inv(30), 0);
        FAIL("expected ResourceError");
    } catch (const ResourceError& e) {
        CHECK(e.best.width() > pow10_inv(30));
        CHECK(e.best.lo <= kR1Hi);
        CHECK(e.best.hi >= kR1Lo);
    }
}

TEST_CASE("interval primitives") {
    Interval a(Rational(0), Rational(2));
    Interval b(Rational(1), Rational(3));
    CHECK(a.intersects(b));
    CHECK(a.intersect(b) == Interval(Rational(1), Rational(2)));
    CHECK((a + b) == Interval(Rational(1), Rational(5)));
    CHECK_THROWS_AS(Interval(Rational(2), Rational(1)), DomainError);
    CHECK_THROWS_AS(a.intersect(Interval(Rational(5), Rational(6))), DomainError);
}
