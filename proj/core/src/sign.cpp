#include "stirlingcf/sign.hpp"

namespace stirlingcf {

std::string SignVerdict::kind_str() const {
    switch (kind) {
        case SignKind::ConstantPositive: return "positive";
        case SignKind::ConstantNegative: return "negative";
        case SignKind::IdenticallyZero: return "identically-zero";
        case SignKind::RootOnRay: return "root-on-ray";
        case SignKind::Inconclusive: return "inconclusive";
    }
    return "?";
}

std::string SignVerdict::method_str() const {
    return method == SignMethod::CoefficientShift ? "coefficient-shift" : "sturm";
}

Poly taylor_shift(const Poly& p, const Rational& c) {
    return p.compose(Poly{c, Rational(1)});
}

namespace {

// Positive integer multiple with coefficient gcd 1. Positive scaling keeps
// every sign evaluation unchanged, which is all the Sturm chain needs.
Poly primitive_part(const Poly& p) {
    if (p.is_zero()) return p;
    mpz_class lcm_den = 1;
    for (const auto& c : p.coeffs())
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
    mpz_class gcd_num = 0;
    for (const auto& c : p.coeffs()) {
        mpz_class cleared = c.num() * (lcm_den / c.den());
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), cleared.get_mpz_t());
    }
    return p.scaled(Rational(std::move(lcm_den), std::move(gcd_num)));
}

// Remainder of polynomial division a = q*b + r with deg r < deg b.
Poly poly_rem(Poly a, const Poly& b) {
    if (b.is_zero()) throw DomainError("poly_rem: division by zero polynomial");
    while (!a.is_zero() && a.degree() >= b.degree()) {
        Rational f = a.leading() / b.leading();
        a -= b.scaled(f).shifted_up(a.degree() - b.degree());
    }
    return a;
}

int sign_variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

int variations_at(const std::vector<Poly>& chain, const Rational& x) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& q : chain) signs.push_back(q.eval(x).sign());
    return sign_variations(signs);
}

int variations_at_infinity(const std::vector<Poly>& chain) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& q : chain) signs.push_back(q.is_zero() ? 0 : q.leading().sign());
    return sign_variations(signs);
}

// Strict upper bound on the absolute value of every real root.
Rational cauchy_root_bound(const Poly& p) {
    Rational m(0);
    const Rational lead = p.leading().abs();
    for (int i = 0; i < p.degree(); ++i) {
        Rational q = p.coeff(i).abs() / lead;
        if (q > m) m = q;
    }
    return m + Rational(1);
}

// Distinct roots of p in (a, b]; requires p(a) != 0.
int root_count(const std::vector<Poly>& chain, const Rational& a, const Rational& b) {
    return variations_at(chain, a) - variations_at(chain, b);
}

} // namespace

std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain;
    chain.push_back(primitive_part(p));
    Poly d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(primitive_part(d));
    while (true) {
        Poly r = poly_rem(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break;
        chain.push_back(primitive_part(-r));
    }
    return chain;
}

int sturm_root_count_on_ray(const Poly& p, const Rational& lo) {
    if (p.is_zero()) throw PreconditionError("sturm_root_count_on_ray: zero polynomial");
    if (p.eval(lo).is_zero())
        throw PreconditionError("sturm_root_count_on_ray: p(lo) == 0");
    auto chain = sturm_chain(p);
    return variations_at(chain, lo) - variations_at_infinity(chain);
}

std::optional<SignVerdict> sign_on_ray_by_shift(const Poly& p, const Rational& lo) {
    if (p.is_zero())
        return SignVerdict{SignKind::IdenticallyZero, SignMethod::CoefficientShift, {}};
    Poly q = taylor_shift(p, lo);
    bool any_neg = false, any_pos = false;
    for (const auto& c : q.coeffs()) {
        if (c.sign() > 0) any_pos = true;
        if (c.sign() < 0) any_neg = true;
    }
    if (any_pos && any_neg) return std::nullopt;
    // One-signed coefficients with a zero constant term still vanish at lo.
    if (q.coeff(0).is_zero())
        return SignVerdict{SignKind::RootOnRay, SignMethod::CoefficientShift,
                           Interval(lo, lo)};
    return SignVerdict{any_pos ? SignKind::ConstantPositive : SignKind::ConstantNegative,
                       SignMethod::CoefficientShift, {}};
}

SignVerdict sign_on_ray_by_sturm(const Poly& p, const Rational& lo) {
    if (p.is_zero())
        return SignVerdict{SignKind::IdenticallyZero, SignMethod::Sturm, {}};
    if (p.eval(lo).is_zero())
        return SignVerdict{SignKind::RootOnRay, SignMethod::Sturm, Interval(lo, lo)};

    auto chain = sturm_chain(p);
    int count = variations_at(chain, lo) - variations_at_infinity(chain);
    if (count == 0) {
        return SignVerdict{p.eval(lo).sign() > 0 ? SignKind::ConstantPositive
                                                 : SignKind::ConstantNegative,
                           SignMethod::Sturm, {}};
    }

    // Isolate one root in (lo, U] by bisection on variation counts. Every
    // ray root lies strictly below the Cauchy bound, so U > lo here.
    Rational a = lo;
    Rational b = cauchy_root_bound(p);
    if (!(b > lo))
        throw InternalInvariantError("sign_on_ray: root bound does not exceed ray start");
    int c = root_count(chain, a, b);
    while (c > 1) {
        Rational mid = (a + b) / Rational(2);
        if (p.eval(mid).is_zero())
            return SignVerdict{SignKind::RootOnRay, SignMethod::Sturm, Interval(mid, mid)};
        int cl = root_count(chain, a, mid);
        if (cl >= 1) {
            b = mid;
            c = cl;
        } else {
            a = mid;  // all counted roots sit in (mid, b]
        }
    }
    return SignVerdict{SignKind::RootOnRay, SignMethod::Sturm, Interval(a, b)};
}

SignVerdict sign_on_ray(const Poly& p, const Rational& lo) {
    if (auto v = sign_on_ray_by_shift(p, lo)) return *v;
    return sign_on_ray_by_sturm(p, lo);
}

} // namespace stirlingcf
