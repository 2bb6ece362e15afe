#include "doctest.h"

#include <random>

#include "stirlingcf/poly.hpp"

using namespace stirlingcf;

namespace {

Poly random_poly(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> coef(-9, 9);
    std::uniform_int_distribution<long> den(1, 7);
    std::vector<Rational> c;
    int d = deg(rng);
    for (int i = 0; i <= d; ++i) c.emplace_back(coef(rng), den(rng));
    return Poly(std::move(c));
}

} // namespace

TEST_CASE("normalization drops trailing zeros") {
    Poly p{Rational(1), Rational(2), Rational(0), Rational(0)};
    CHECK(p.degree() == 1);
    CHECK(Poly{Rational(0)}.is_zero());
    CHECK(Poly().degree() == -1);
}

TEST_CASE("basic arithmetic") {
    Poly z = Poly::variable();
    CHECK((z + Poly::constant(Rational(1))) + (z - Poly::constant(Rational(1))) ==
          z.scaled(Rational(2)));
    Poly p{Rational(2), Rational(12)};  // 12z + 2
    CHECK(p.scaled(Rational(1, 2)) == Poly{Rational(1), Rational(6)});
    CHECK(z * (z + Poly::constant(Rational(1))) == Poly{Rational(0), Rational(1), Rational(1)});
}

TEST_CASE("evaluation") {
    Poly p{Rational(2), Rational(12)};
    CHECK(p.eval(Rational(2)) == Rational(26));
    CHECK(Poly().eval(Rational(5)) == Rational(0));
    Poly f5{Rational(60), Rational(1680), Rational(7560)};
    CHECK(f5.eval(Rational(2)) == Rational(33660));
}

TEST_CASE("eval is multiplicative (randomized, exact)") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<long> xs(-6, 6);
    for (int i = 0; i < 300; ++i) {
        Poly a = random_poly(rng, 5), b = random_poly(rng, 5);
        Rational x(xs(rng), 1 + (i % 3));
        CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
    }
}

TEST_CASE("derivative and compose") {
    Poly p{Rational(1), Rational(2), Rational(3)};  // 3z^2 + 2z + 1
    CHECK(p.derivative() == Poly{Rational(2), Rational(6)});
    // p(w + 1)
    Poly shifted = p.compose(Poly{Rational(1), Rational(1)});
    CHECK(shifted == Poly{Rational(6), Rational(8), Rational(3)});
}

TEST_CASE("joint content normalization matches the displayed forms") {
    // (5/6, 10z + 1) -> (5, 60z + 6)
    auto [n1, d1] = joint_content_normalize(Poly{Rational(5, 6)},
                                            Poly{Rational(1), Rational(10)});
    CHECK(n1 == Poly{Rational(5)});
    CHECK(d1 == Poly{Rational(6), Rational(60)});

    // joint content 2 removed from the k = 5 pair
    auto [n2, d2] = joint_content_normalize(
        Poly{Rational(154), Rational(1260)},
        Poly{Rational(120), Rational(3360), Rational(15120)});
    CHECK(n2 == Poly{Rational(77), Rational(630)});
    CHECK(d2 == Poly{Rational(60), Rational(1680), Rational(7560)});

    // zero numerator
    auto [n3, d3] = joint_content_normalize(Poly(), Poly{Rational(7)});
    CHECK(n3.is_zero());
    CHECK(d3 == Poly{Rational(1)});

    CHECK_THROWS_AS(joint_content_normalize(Poly{Rational(1)}, Poly()), DomainError);
}

TEST_CASE("joint content normalization is idempotent and fixes the sign") {
    std::mt19937 rng(4242);
    for (int i = 0; i < 200; ++i) {
        Poly n = random_poly(rng, 4);
        Poly d = random_poly(rng, 4);
        if (d.is_zero()) continue;
        auto [n1, d1] = joint_content_normalize(n, d);
        CHECK(d1.leading().sign() > 0);
        auto [n2, d2] = joint_content_normalize(n1, d1);
        CHECK(n1 == n2);
        CHECK(d1 == d2);
    }
}

TEST_CASE("rendering") {
    Poly f5{Rational(60), Rational(1680), Rational(7560)};
    CHECK(f5.str() == "7560z^2 + 1680z + 60");
    Poly d{Rational(2537, 900), Rational(53, 2)};
    CHECK(d.str() == "(53/2)z + (2537/900)");
    CHECK(Poly().str() == "0");
    Poly m{Rational(-1, 2)};
    CHECK(m.str() == "-(1/2)");
    CHECK((Poly::variable() - Poly::constant(Rational(3))).str("x") == "x - 3");
}
