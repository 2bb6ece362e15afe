#include "stirlingcf/bounds.hpp"

#include <map>

namespace stirlingcf {

bool BoundSpec::is_lower() const {
    switch (kind) {
        case BoundKind::RobbinsUpper: return false;
        case BoundKind::TelescopeG: return m % 2 == 0;
        default: return true;
    }
}

std::string BoundSpec::name() const {
    switch (kind) {
        case BoundKind::Cesaro: return "cesaro";
        case BoundKind::RobbinsLower: return "robbins-lower";
        case BoundKind::RobbinsUpper: return "robbins-upper";
        case BoundKind::Maria: return "maria";
        case BoundKind::Nanjundiah: return "nanjundiah";
        case BoundKind::Popov: return "popov";
        case BoundKind::TelescopeG: return "g" + std::to_string(m);
    }
    return "?";
}

Rational eval_g(const CFCoefficients& coeffs, int m, long n) {
    if (m < 1 || m > coeffs.size())
        throw PreconditionError("eval_g: m out of range");
    if (n < 1) throw PreconditionError("eval_g: n must be >= 1");
    const Rational nn(n);
    Rational g(0);
    for (int i = m; i >= 1; --i) {
        const Rational den = nn + g;
        if (den.is_zero()) throw DomainError("eval_g: zero intermediate denominator");
        g = coeffs.at(i) / den;
    }
    return g;
}

Rational eval_g_recurrence(const CFCoefficients& coeffs, int m, long n) {
    if (m < 1 || m > coeffs.size())
        throw PreconditionError("eval_g_recurrence: m out of range");
    const Rational nn(n);
    // u_k = n u_{k-1} + a_k u_{k-2}; numerators from (1, 0), denominators
    // from (0, 1).
    Rational num_prev(1), num_cur(0);
    Rational den_prev(0), den_cur(1);
    for (int i = 1; i <= m; ++i) {
        const Rational& a = coeffs.at(i);
        Rational num_next = nn * num_cur + a * num_prev;
        Rational den_next = nn * den_cur + a * den_prev;
        num_prev = std::move(num_cur);
        num_cur = std::move(num_next);
        den_prev = std::move(den_cur);
        den_cur = std::move(den_next);
    }
    if (den_cur.is_zero()) throw DomainError("eval_g_recurrence: zero denominator");
    return num_cur / den_cur;
}

Rational classical_bound(const BoundSpec& spec, long n) {
    if (n < 1) throw PreconditionError("classical_bound: n must be >= 1");
    const Rational nn(n);
    const Rational twelfth(1, 12);
    switch (spec.kind) {
        case BoundKind::RobbinsLower:
            return Rational(1, 12 * n + 1);
        case BoundKind::RobbinsUpper:
            return Rational(1, 12 * n);
        case BoundKind::Cesaro:
            return twelfth / (nn + Rational(1, 48));
        case BoundKind::Maria:
            return twelfth / (nn + Rational(1, 16 * n + 8));
        case BoundKind::Nanjundiah:
            return twelfth / (nn + Rational(n, 30 * n * n - 1));
        case BoundKind::Popov: {
            // (1/12) / (n + (1/30)(1 - (1/4)/(n + 1/2)^2) / n)
            const Rational half(1, 2);
            const Rational corr =
                Rational(1) - Rational(1, 4) / ((nn + half) * (nn + half));
            return twelfth / (nn + Rational(1, 30) * corr / nn);
        }
        case BoundKind::TelescopeG:
            throw PreconditionError("classical_bound: TelescopeG needs coefficients");
    }
    throw PreconditionError("classical_bound: unknown kind");
}

Rational bound_value(const BoundSpec& spec, long n, const CFCoefficients& coeffs) {
    if (spec.kind == BoundKind::TelescopeG) return eval_g(coeffs, spec.m, n);
    return classical_bound(spec, n);
}

ComparisonReport compare_bounds(const BoundSpec& a, const BoundSpec& b, long n_max,
                                const CFCoefficients& coeffs) {
    if (a.is_lower() != b.is_lower())
        throw PreconditionError("compare_bounds: mixed bound directions");
    if (n_max < 1) throw PreconditionError("compare_bounds: n_max must be >= 1");
    ComparisonReport r;
    r.a = a;
    r.b = b;
    r.n_max = n_max;
    r.verdict.reserve(static_cast<size_t>(n_max));
    for (long n = 1; n <= n_max; ++n) {
        const Rational va = bound_value(a, n, coeffs);
        const Rational vb = bound_value(b, n, coeffs);
        signed char v = va > vb ? 1 : (va == vb ? 0 : -1);
        if (v == 0) r.ties.push_back(n);
        r.verdict.push_back(v);
    }
    long n0 = n_max + 1;
    for (long n = n_max; n >= 1; --n) {
        if (r.verdict[static_cast<size_t>(n - 1)] > 0)
            n0 = n;
        else
            break;
    }
    if (n0 <= n_max) r.dominates_from = n0;
    return r;
}

PaperInequalityReport verify_paper_inequalities(long n_max) {
    if (n_max < 10) throw PreconditionError("verify_paper_inequalities: n_max must be >= 10");
    PaperInequalityReport rep;
    rep.n_max = n_max;

    CFCoefficients lb2;
    lb2.a = {Rational(1, 12), Rational(1, 30)};
    lb2.source_k = {3, 3};
    CFCoefficients lb3;
    lb3.a = {Rational(1, 12), Rational(1, 30), Rational(53, 210), Rational(195, 371)};
    lb3.source_k = {5, 5, 5, 5};

    rep.lb2_gt_nanjundiah = true;
    rep.lb3_gt_popov = true;
    rep.helper_pointwise = true;
    const Rational half(1, 2);
    for (long n = 1; n <= n_max; ++n) {
        const Rational nn(n);
        if (!(eval_g(lb2, 2, n) > classical_bound({BoundKind::Nanjundiah}, n)) &&
            !rep.lb2_first_failure) {
            rep.lb2_gt_nanjundiah = false;
            rep.lb2_first_failure = n;
        }
        const Rational lhs = Rational(1) - Rational(1, 4) / ((nn + half) * (nn + half));
        const Rational rhs =
            Rational(1) / (Rational(1) + Rational(53, 210) / (nn * nn + Rational(195, 371)));
        if (!(lhs > rhs) && !rep.helper_first_failure) {
            rep.helper_pointwise = false;
            rep.helper_first_failure = n;
        }
        if (!(eval_g(lb3, 4, n) > classical_bound({BoundKind::Popov}, n)) &&
            !rep.lb3_first_failure) {
            rep.lb3_gt_popov = false;
            rep.lb3_first_failure = n;
        }
    }

    // Helper inequality cleared into a single rational function of real n:
    //   1 - (1/4)/(n+1/2)^2     = (n^2 + n) / (n^2 + n + 1/4)
    //   1/(1 + (53/210)/(n^2+195/371)) = (n^2 + 195/371) / (n^2 + 195/371 + 53/210)
    const Poly n2n{Rational(0), Rational(1), Rational(1)};  // n^2 + n
    const Poly lhs_den{Rational(1, 4), Rational(1), Rational(1)};
    const Poly rhs_num{Rational(195, 371), Rational(0), Rational(1)};
    const Poly rhs_den{Rational(195, 371) + Rational(53, 210), Rational(0), Rational(1)};
    Poly diff_num = n2n * rhs_den - rhs_num * lhs_den;
    Poly diff_den = lhs_den * rhs_den;
    auto [cn, cd] = joint_content_normalize(diff_num, diff_den);
    rep.helper_numerator = cn;
    rep.helper_denominator = cd;
    rep.helper_num_verdict = sign_on_ray(rep.helper_numerator, Rational(1));
    rep.helper_den_verdict = sign_on_ray(rep.helper_denominator, Rational(1));
    rep.helper_certified =
        rep.helper_num_verdict.kind == SignKind::ConstantPositive &&
        rep.helper_den_verdict.kind == SignKind::ConstantPositive;

    return rep;
}

SandwichReport sandwich_check(const CFCoefficients& stabilized, long n_max, int m_max,
                              const Rational& width) {
    if (m_max > stabilized.size())
        throw PreconditionError("sandwich_check: stabilized coefficients too short");
    if (n_max < 1 || m_max < 1)
        throw PreconditionError("sandwich_check: empty range");
    SandwichReport rep;
    rep.n_max = n_max;
    rep.m_max = m_max;
    rep.width = width;

    const Rational refine_factor = pow10_inv(6);
    for (long n = 1; n <= n_max; ++n) {
        Interval rn = binet_interval(n, width);
        bool refined = false;
        for (int m = 1; m <= m_max; ++m) {
            SandwichCell cell;
            cell.n = n;
            cell.m = m;
            cell.g = eval_g(stabilized, m, n);
            const bool even = m % 2 == 0;
            auto classify = [&](const Interval& iv) -> std::optional<SandwichVerdict> {
                if (even) {
                    if (cell.g < iv.lo) return SandwichVerdict::ConsistentBelow;
                    if (cell.g > iv.hi) return SandwichVerdict::Violation;
                } else {
                    if (cell.g > iv.hi) return SandwichVerdict::ConsistentAbove;
                    if (cell.g < iv.lo) return SandwichVerdict::Violation;
                }
                return std::nullopt;  // inside the enclosure
            };
            auto v = classify(rn);
            if (!v) {
                if (!refined) {
                    rn = rn.intersect(binet_interval(n, width * refine_factor));
                    refined = true;
                    ++rep.refined_cells;
                }
                v = classify(rn);
                cell.used_refinement = true;
            }
            cell.verdict = v.value_or(SandwichVerdict::Undecided);
            if (cell.verdict == SandwichVerdict::Violation) ++rep.violations;
            if (cell.verdict == SandwichVerdict::Undecided) ++rep.undecided;
            rep.cells.push_back(std::move(cell));
        }
    }
    return rep;
}

TelescopeSumReport telescope_sum_check(const CFCoefficients& coeffs, int m, long n, long P) {
    if (P <= n) throw PreconditionError("telescope_sum_check: P must exceed n");
    TelescopeSumReport rep;
    Rational sum(0);
    for (long p = n; p <= P; ++p)
        sum += eval_g(coeffs, m, p) - eval_g(coeffs, m, p + 1);
    rep.summed = sum;
    rep.collapsed = eval_g(coeffs, m, n) - eval_g(coeffs, m, P + 1);
    rep.exact_equal = rep.summed == rep.collapsed;
    return rep;
}

} // namespace stirlingcf
