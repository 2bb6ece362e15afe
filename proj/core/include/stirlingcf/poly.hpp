#ifndef STIRLINGCF_POLY_HPP
#define STIRLINGCF_POLY_HPP

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stirlingcf/rational.hpp"

namespace stirlingcf {

/// Dense univariate polynomial over Rational. Coefficient i is the
/// coefficient of var^i; the zero polynomial has an empty list and the
/// leading coefficient of a nonzero polynomial is never zero.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rational> ascending);
    explicit Poly(std::vector<Rational> ascending);

    static Poly constant(const Rational& c);
    static Poly variable();

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(int i) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly scaled(const Rational& c) const;
    /// Multiplies by var^k.
    Poly shifted_up(int k = 1) const;
    Poly derivative() const;

    /// Exact Horner evaluation; the zero polynomial evaluates to 0.
    Rational eval(const Rational& x) const;
    /// p(q(x)) by Horner; intended for linear q, exact for any.
    Poly compose(const Poly& q) const;

    std::string str(std::string_view var = "z") const;

private:
    void normalize();
    std::vector<Rational> c_;
};

using ZPoly = Poly;  // variable z = p(p+1)
using XPoly = Poly;  // variable x = 2p+1

/// Scales both polynomials by one rational of positive magnitude so that all
/// coefficients are integers with joint content 1 and the denominator's
/// leading coefficient is positive. Throws DomainError if den is zero.
std::pair<Poly, Poly> joint_content_normalize(const Poly& num, const Poly& den);

} // namespace stirlingcf

#endif
