#include "stirlingcf/poly.hpp"

#include <algorithm>
#include <sstream>

namespace stirlingcf {

Poly::Poly(std::initializer_list<Rational> ascending) : c_(ascending) {
    normalize();
}

Poly::Poly(std::vector<Rational> ascending) : c_(std::move(ascending)) {
    normalize();
}

Poly Poly::constant(const Rational& c) {
    Poly p;
    if (!c.is_zero()) p.c_ = {c};
    return p;
}

Poly Poly::variable() {
    return Poly{Rational(0), Rational(1)};
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<size_t>(i)];
}

const Rational& Poly::leading() const {
    if (c_.empty()) throw PreconditionError("Poly::leading: zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] += a.c_[i] * b.c_[j];
    r.normalize();
    return r;
}

Poly Poly::scaled(const Rational& c) const {
    if (c.is_zero()) return Poly();
    Poly r = *this;
    for (auto& x : r.c_) x *= c;
    return r;
}

Poly Poly::shifted_up(int k) const {
    if (is_zero() || k == 0) return *this;
    Poly r;
    r.c_.assign(static_cast<size_t>(k), Rational(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

Poly Poly::derivative() const {
    Poly r;
    for (size_t i = 1; i < c_.size(); ++i)
        r.c_.push_back(c_[i] * Rational(static_cast<long>(i)));
    r.normalize();
    return r;
}

Rational Poly::eval(const Rational& x) const {
    Rational r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

Poly Poly::compose(const Poly& q) const {
    Poly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * q + Poly::constant(*it);
    return r;
}

std::string Poly::str(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational c = coeff(i);
        if (c.is_zero()) continue;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool need_coeff = (i == 0) || !(a == Rational(1));
        if (need_coeff) {
            if (a.is_integer())
                os << a.str();
            else
                os << "(" << a.str() << ")";
        }
        if (i >= 1) {
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<Poly, Poly> joint_content_normalize(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw DomainError("joint_content_normalize: zero denominator");
    mpz_class lcm_den = 1;
    auto fold_lcm = [&lcm_den](const Poly& p) {
        for (const auto& c : p.coeffs())
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
    };
    fold_lcm(num);
    fold_lcm(den);

    mpz_class gcd_num = 0;
    auto fold_gcd = [&](const Poly& p) {
        for (const auto& c : p.coeffs()) {
            mpz_class cleared = c.num() * (lcm_den / c.den());
            mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), cleared.get_mpz_t());
        }
    };
    fold_gcd(num);
    fold_gcd(den);
    if (gcd_num == 0) gcd_num = 1;

    Rational sigma{lcm_den, gcd_num};
    if (den.leading().sign() < 0) sigma = -sigma;
    return {num.scaled(sigma), den.scaled(sigma)};
}

} // namespace stirlingcf
