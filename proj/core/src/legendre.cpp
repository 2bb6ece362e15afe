#include "stirlingcf/legendre.hpp"

#include <vector>

#include "stirlingcf/sign.hpp"

namespace stirlingcf {

LegendrePair legendre_pair(int k) {
    if (k < 0) throw PreconditionError("legendre_pair: k must be >= 0");
    XPoly P_prev{Rational(1)};                       // P_0
    XPoly P_cur = Poly::variable();                  // P_1
    XPoly S_prev;                                    // P*_0
    XPoly S_cur{Rational(1)};                        // P*_1
    if (k == 0) return {P_prev, S_prev};
    for (int j = 1; j < k; ++j) {
        const Rational c1(2 * j + 1, j + 1);
        const Rational c2(j, j + 1);
        XPoly P_next = P_cur.shifted_up().scaled(c1) - P_prev.scaled(c2);
        XPoly S_next = S_cur.shifted_up().scaled(c1) - S_prev.scaled(c2);
        P_prev = std::move(P_cur);
        P_cur = std::move(P_next);
        S_prev = std::move(S_cur);
        S_cur = std::move(S_next);
    }
    return {P_cur, S_cur};
}

bool is_even_poly(const Poly& p) {
    for (int i = 1; i <= p.degree(); i += 2)
        if (!p.coeff(i).is_zero()) return false;
    return true;
}

bool is_odd_poly(const Poly& p) {
    for (int i = 0; i <= p.degree(); i += 2)
        if (!p.coeff(i).is_zero()) return false;
    return true;
}

ZPoly even_x_to_z(const XPoly& p) {
    if (!is_even_poly(p))
        throw InternalInvariantError("even_x_to_z: polynomial has an odd-degree term");
    std::vector<Rational> even;
    for (int i = 0; i <= p.degree(); i += 2) even.push_back(p.coeff(i));
    // Horner in x^2 = 4z + 1.
    const Poly sub{Rational(1), Rational(4)};
    Poly r;
    for (auto it = even.rbegin(); it != even.rend(); ++it)
        r = r * sub + Poly::constant(*it);
    return r;
}

Rational RatFuncZ::eval(const Rational& z) const {
    Rational d = den.eval(z);
    if (d.is_zero()) throw DomainError("RatFuncZ::eval: denominator vanishes");
    return num.eval(z) / d;
}

RatFuncZ to_z_form(int k) {
    if (k < 2) throw PreconditionError("to_z_form: k must be >= 2");
    auto [P, Pstar] = legendre_pair(k);
    XPoly num_x = Pstar.shifted_up() - P;  // x P*_k - P_k
    XPoly den_x = P;
    if (k % 2 == 1) {
        // Both sides are odd; strip the shared factor x.
        if (!num_x.coeff(0).is_zero() || !den_x.coeff(0).is_zero())
            throw InternalInvariantError("to_z_form: expected odd polynomials for odd k");
        auto drop_x = [](const Poly& p) {
            if (p.is_zero()) return p;
            std::vector<Rational> c(p.coeffs().begin() + 1, p.coeffs().end());
            return Poly(std::move(c));
        };
        num_x = drop_x(num_x);
        den_x = drop_x(den_x);
    }
    auto [nz, dz] = joint_content_normalize(even_x_to_z(num_x), even_x_to_z(den_x));

    RatFuncZ f{std::move(nz), std::move(dz), k};
    const int d = k / 2;
    if (f.den.degree() != d || f.num.degree() != d - 1)
        throw InternalInvariantError("to_z_form: degree law violated");
    if (sign_on_ray(f.den, Rational(1)).kind != SignKind::ConstantPositive)
        throw InternalInvariantError("to_z_form: f_k has a root on [1, inf)");
    return f;
}

Rational convergent_value(int k, long p) {
    if (p < 1) throw PreconditionError("convergent_value: p must be >= 1");
    const RatFuncZ f = to_z_form(k);
    return f.eval(Rational(p) * Rational(p + 1));
}

} // namespace stirlingcf
