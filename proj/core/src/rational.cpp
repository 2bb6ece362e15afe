#include "stirlingcf/rational.hpp"

#include <cctype>
#include <ostream>

namespace stirlingcf {

Rational::Rational(long num, long den) {
    if (den == 0) throw DomainError("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpz_class num, mpz_class den) {
    if (den == 0) throw DomainError("Rational: zero denominator");
    v_ = mpq_class(std::move(num), std::move(den));
    v_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
    auto is_int = [](std::string_view t) {
        if (!t.empty() && t.front() == '-') t.remove_prefix(1);
        if (t.empty()) return false;
        for (char ch : t)
            if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
        return true;
    };
    auto slash = s.find('/');
    std::string_view ns = s.substr(0, slash);
    std::string_view ds = slash == std::string_view::npos ? std::string_view("1")
                                                          : s.substr(slash + 1);
    if (!is_int(ns) || !is_int(ds))
        throw DomainError("Rational::parse: malformed rational '" + std::string(s) + "'");
    mpz_class n(std::string(ns), 10);
    mpz_class d(std::string(ds), 10);
    if (d == 0) throw DomainError("Rational::parse: zero denominator");
    return Rational(std::move(n), std::move(d));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw DomainError("Rational: reciprocal of zero");
    Rational r;
    mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
    return r;
}

Rational Rational::pow(unsigned long e) const {
    Rational r;
    mpz_pow_ui(mpq_numref(r.v_.get_mpq_t()), num().get_mpz_t(), e);
    mpz_pow_ui(mpq_denref(r.v_.get_mpq_t()), den().get_mpz_t(), e);
    return r;  // reduced input stays reduced under powering
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::string Rational::decimal(int digits, RoundDir dir) const {
    if (digits < 0) throw PreconditionError("Rational::decimal: negative digit count");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class scaled_num = num() * scale;
    mpz_class t;
    if (dir == RoundDir::Down)
        mpz_fdiv_q(t.get_mpz_t(), scaled_num.get_mpz_t(), den().get_mpz_t());
    else
        mpz_cdiv_q(t.get_mpz_t(), scaled_num.get_mpz_t(), den().get_mpz_t());

    bool neg = t < 0;
    mpz_class at = neg ? mpz_class(-t) : t;
    std::string s = at.get_str();
    if ((int)s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    std::string out = neg ? "-" : "";
    out += s.substr(0, s.size() - digits);
    if (digits > 0) {
        out += '.';
        out += s.substr(s.size() - digits);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational pow10_inv(unsigned long e) {
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, e);
    return Rational(mpz_class(1), std::move(d));
}

} // namespace stirlingcf
