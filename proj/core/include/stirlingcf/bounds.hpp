#ifndef STIRLINGCF_BOUNDS_HPP
#define STIRLINGCF_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "stirlingcf/binet.hpp"
#include "stirlingcf/telescope.hpp"

namespace stirlingcf {

enum class BoundKind {
    Cesaro,
    RobbinsLower,
    RobbinsUpper,
    Maria,
    Nanjundiah,
    Popov,
    TelescopeG,
};

/// A named bound on r_n. TelescopeG(m) is a lower bound for even m and an
/// upper bound for odd m; that direction is conjectural and flagged so.
struct BoundSpec {
    BoundKind kind = BoundKind::RobbinsLower;
    int m = 0;  // depth, TelescopeG only

    static BoundSpec telescope(int m) { return BoundSpec{BoundKind::TelescopeG, m}; }

    bool is_lower() const;
    bool conjectural() const { return kind == BoundKind::TelescopeG; }
    std::string name() const;
};

/// The finite continued fraction a_1/(n + a_2/(n + ... + a_m/n)), evaluated
/// bottom-up, exactly. Requires 1 <= m <= coeffs.size().
Rational eval_g(const CFCoefficients& coeffs, int m, long n);

/// Same value through the numerator/denominator three-term recurrence
/// u_k = n u_{k-1} + a_k u_{k-2}; independent cross-check path.
Rational eval_g_recurrence(const CFCoefficients& coeffs, int m, long n);

/// Exact value of a classical bound at integer n >= 1 (all kinds except
/// TelescopeG, which needs coefficients).
Rational classical_bound(const BoundSpec& spec, long n);

Rational bound_value(const BoundSpec& spec, long n, const CFCoefficients& coeffs);

/// Exact pointwise comparison of two same-direction bounds.
struct ComparisonReport {
    BoundSpec a, b;
    long n_max = 0;
    std::vector<signed char> verdict;  // index n-1: +1 a>b, 0 tie, -1 a<b
    /// Smallest n0 with a > b for every n in [n0, n_max]; nullopt when a
    /// does not dominate even at n_max.
    std::optional<long> dominates_from;
    std::vector<long> ties;

    bool dominates_everywhere() const { return dominates_from && *dominates_from == 1; }
};

ComparisonReport compare_bounds(const BoundSpec& a, const BoundSpec& b, long n_max,
                                const CFCoefficients& coeffs = {});

/// The dominance and helper-inequality checks: lb2 vs Nanjundiah, the
/// Popov helper inequality (pointwise and as a polynomial sign certificate
/// on the whole real ray n >= 1), and lb3 vs Popov.
struct PaperInequalityReport {
    long n_max = 0;

    bool lb2_gt_nanjundiah = false;
    std::optional<long> lb2_first_failure;

    bool helper_pointwise = false;
    std::optional<long> helper_first_failure;
    /// Numerator of the cleared helper inequality, jointly normalized; its
    /// positivity on n >= 1 certifies the inequality for all real n >= 1.
    Poly helper_numerator;
    Poly helper_denominator;
    SignVerdict helper_num_verdict;
    SignVerdict helper_den_verdict;
    bool helper_certified = false;

    bool lb3_gt_popov = false;
    std::optional<long> lb3_first_failure;

    bool all_hold() const {
        return lb2_gt_nanjundiah && helper_pointwise && helper_certified && lb3_gt_popov;
    }
};

PaperInequalityReport verify_paper_inequalities(long n_max);

/// Conjecture evidence: g_m(n) against the certified r_n enclosure.
enum class SandwichVerdict {
    ConsistentBelow,  // even m, g < lo
    ConsistentAbove,  // odd m, g > hi
    Violation,        // g strictly on the wrong side
    Undecided,        // g inside the enclosure after refinement
};

struct SandwichCell {
    long n = 0;
    int m = 0;
    Rational g;
    SandwichVerdict verdict = SandwichVerdict::Undecided;
    bool used_refinement = false;
};

struct SandwichReport {
    long n_max = 0;
    int m_max = 0;
    Rational width;
    std::vector<SandwichCell> cells;
    int violations = 0;
    int undecided = 0;
    int refined_cells = 0;

    bool all_consistent() const { return violations == 0 && undecided == 0; }
};

/// One interval per n at the given width; a cell landing inside the
/// enclosure triggers exactly one refinement of that n's interval to
/// width/10^6 before it may be reported undecided.
SandwichReport sandwich_check(const CFCoefficients& stabilized, long n_max, int m_max,
                              const Rational& width);

/// Verifies sum_{p=n}^{P} (g_m(p) - g_m(p+1)) = g_m(n) - g_m(P+1) exactly.
struct TelescopeSumReport {
    Rational summed;
    Rational collapsed;
    bool exact_equal = false;
};

TelescopeSumReport telescope_sum_check(const CFCoefficients& coeffs, int m, long n, long P);

} // namespace stirlingcf

#endif
