#include "doctest.h"

#include "stirlingcf/binet.hpp"
#include "stirlingcf/legendre.hpp"

using namespace stirlingcf;

TEST_CASE("legendre pairs for small k") {
    auto [P1, S1] = legendre_pair(1);
    CHECK(P1 == Poly::variable());
    CHECK(S1 == Poly{Rational(1)});

    auto [P2, S2] = legendre_pair(2);
    CHECK(P2 == Poly{Rational(-1, 2), Rational(0), Rational(3, 2)});
    CHECK(S2 == Poly{Rational(0), Rational(3, 2)});

    auto [P3, S3] = legendre_pair(3);
    CHECK(P3 == Poly{Rational(0), Rational(-3, 2), Rational(0), Rational(5, 2)});
    CHECK(S3 == Poly{Rational(-2, 3), Rational(0), Rational(5, 2)});

    auto [P0, S0] = legendre_pair(0);
    CHECK(P0 == Poly{Rational(1)});
    CHECK(S0.is_zero());

    CHECK_THROWS_AS(legendre_pair(-1), PreconditionError);
}

TEST_CASE("parity identities hold for k <= 30") {
    for (int k = 0; k <= 30; ++k) {
        auto [P, S] = legendre_pair(k);
        // P_k(-x) = (-1)^k P_k(x): only exponents of parity k appear.
        CHECK((k % 2 == 0 ? is_even_poly(P) : is_odd_poly(P)));
        if (k >= 1) CHECK((k % 2 == 0 ? is_odd_poly(S) : is_even_poly(S)));
    }
}

TEST_CASE("z-form fixtures") {
    RatFuncZ f2 = to_z_form(2);
    CHECK(f2.num == Poly{Rational(1)});
    CHECK(f2.den == Poly{Rational(2), Rational(12)});

    RatFuncZ f3 = to_z_form(3);
    CHECK(f3.num == Poly{Rational(5)});
    CHECK(f3.den == Poly{Rational(6), Rational(60)});

    RatFuncZ f5 = to_z_form(5);
    CHECK(f5.num == Poly{Rational(77), Rational(630)});
    CHECK(f5.den == Poly{Rational(60), Rational(1680), Rational(7560)});

    CHECK_THROWS_AS(to_z_form(1), PreconditionError);
    CHECK_THROWS_AS(to_z_form(0), PreconditionError);
}

TEST_CASE("degree law for 2 <= k <= 30") {
    for (int k = 2; k <= 30; ++k) {
        RatFuncZ f = to_z_form(k);
        CHECK(f.den.degree() == k / 2);
        CHECK(f.num.degree() == k / 2 - 1);
        CHECK(f.den.leading().sign() > 0);
    }
}

TEST_CASE("convergent values") {
    CHECK(convergent_value(2, 1) == Rational(1, 26));
    CHECK(convergent_value(3, 1) == Rational(5, 126));
    CHECK(convergent_value(5, 1) == Rational(1337, 33660));
    CHECK_THROWS_AS(convergent_value(2, 0), PreconditionError);
}

TEST_CASE("z-form agrees with the direct x-form computation") {
    for (int k = 2; k <= 12; ++k) {
        auto [P, S] = legendre_pair(k);
        for (long p = 1; p <= 10; ++p) {
            const Rational x(2 * p + 1);
            const Rational direct = x * S.eval(x) / P.eval(x) - Rational(1);
            CHECK(convergent_value(k, p) == direct);
        }
    }
}

TEST_CASE("convergents increase in k and stay below epsilon") {
    for (long p = 1; p <= 50; ++p) {
        const Interval eps = epsilon_interval(p, Rational(1, 1000000000000L));
        Rational prev = convergent_value(2, p);
        CHECK(prev < eps.hi);
        for (int k = 3; k <= 12; ++k) {
            Rational cur = convergent_value(k, p);
            CHECK(cur > prev);
            CHECK(cur < eps.hi);
            prev = cur;
        }
    }
}

TEST_CASE("even_x_to_z rejects odd terms") {
    CHECK_THROWS_AS(even_x_to_z(Poly::variable()), InternalInvariantError);
    CHECK(even_x_to_z(Poly{Rational(1), Rational(0), Rational(1)}) ==
          Poly{Rational(2), Rational(4)});  // 1 + x^2 = 4z + 2
}
