#ifndef STIRLINGCF_SIGN_HPP
#define STIRLINGCF_SIGN_HPP

#include <optional>
#include <string>
#include <vector>

#include "stirlingcf/interval.hpp"
#include "stirlingcf/poly.hpp"

namespace stirlingcf {

enum class SignKind {
    ConstantPositive,
    ConstantNegative,
    IdenticallyZero,
    RootOnRay,
    Inconclusive,
};

enum class SignMethod { CoefficientShift, Sturm };

/// Machine-checkable sign verdict for a polynomial on a right half-line.
struct SignVerdict {
    SignKind kind = SignKind::Inconclusive;
    SignMethod method = SignMethod::CoefficientShift;
    /// For RootOnRay: a rational subinterval of the ray containing a root.
    std::optional<Interval> witness;

    bool constant_sign() const {
        return kind == SignKind::ConstantPositive || kind == SignKind::ConstantNegative;
    }
    std::string kind_str() const;
    std::string method_str() const;
};

/// p(w + c), exact Taylor shift.
Poly taylor_shift(const Poly& p, const Rational& c);

/// Sturm chain p, p', -rem(...); elements are primitive integer polynomials.
std::vector<Poly> sturm_chain(const Poly& p);

/// Number of distinct real roots of p in (lo, +inf). Requires p(lo) != 0.
int sturm_root_count_on_ray(const Poly& p, const Rational& lo);

/// Certifies the sign of p on the whole real ray [lo, +inf).
///
/// Strategy: substitute z <- w + lo and test one-signedness of the shifted
/// coefficients (sufficient; method = CoefficientShift); otherwise run a
/// Sturm root count on the ray — zero roots lets the sign at lo decide,
/// and otherwise one root is isolated and returned as RootOnRay.
/// The zero polynomial yields IdenticallyZero.
SignVerdict sign_on_ray(const Poly& p, const Rational& lo);

/// Shift-only path; nullopt when the shifted coefficients have mixed signs.
std::optional<SignVerdict> sign_on_ray_by_shift(const Poly& p, const Rational& lo);

/// Sturm-only path (never falls back to the coefficient test).
SignVerdict sign_on_ray_by_sturm(const Poly& p, const Rational& lo);

} // namespace stirlingcf

#endif
