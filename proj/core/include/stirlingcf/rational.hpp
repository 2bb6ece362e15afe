#ifndef STIRLINGCF_RATIONAL_HPP
#define STIRLINGCF_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "stirlingcf/errors.hpp"

namespace stirlingcf {

enum class RoundDir { Down, Up };

/// Exact arbitrary-precision rational, always stored reduced with a
/// positive denominator. Backed by GMP.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}          // NOLINT: implicit by design
    Rational(long num, long den);
    Rational(mpz_class num, mpz_class den);
    explicit Rational(const mpz_class& n) : v_(n) {}

    /// Parses "p" or "p/q" (base 10, optional leading '-').
    static Rational parse(std::string_view s);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        return c <=> 0;
    }

    Rational abs() const;
    Rational reciprocal() const;
    Rational pow(unsigned long e) const;

    /// Canonical form "p/q"; "/q" omitted when q == 1.
    std::string str() const;

    /// Decimal string with `digits` places after the point, rounded in the
    /// requested direction (Down = toward -inf, Up = toward +inf), so the
    /// printed value never crosses the exact one from the chosen side.
    std::string decimal(int digits, RoundDir dir) const;

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// 10^-e as an exact rational.
Rational pow10_inv(unsigned long e);

} // namespace stirlingcf

#endif
