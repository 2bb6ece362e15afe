#ifndef STIRLINGCF_BINET_HPP
#define STIRLINGCF_BINET_HPP

#include "stirlingcf/interval.hpp"

namespace stirlingcf {

/// Raised when an interval width target cannot be met within the iteration
/// cap; carries the best certified enclosure reached.
class ResourceError : public Error {
public:
    ResourceError(const std::string& msg, Interval best)
        : Error(msg), best(std::move(best)) {}
    Interval best;
};

/// Exact Bernoulli number B_n (B_1 = -1/2) via the defining convolution
/// sum_{j=0}^{m} C(m+1, j) B_j = 0. Cached per process.
Rational bernoulli(int n);

/// B_{2i} / ((2i-1) 2i), the i-th coefficient of the Stirling series.
/// Requires i >= 1.
Rational stirling_coeff(int i);

/// Certified enclosure of eps_p = ((2p+1)/2) log((p+1)/p) - 1 from the
/// series sum_{j>=1} y^{2j}/(2j+1), y = 1/(2p+1), with the geometric tail
/// bound y^{2J+2} / ((2J+3)(1 - y^2)). Extends J until the width target is
/// met; all arithmetic exact.
Interval epsilon_interval(long p, const Rational& width_target);

/// The bracket [1/(12n+1), 1/(12n)] containing r_n.
Interval robbins_bracket(long n);

/// The two consecutive truncations N and N+1 of the Stirling series at
/// integer n, ordered into an interval (alternating-sign bracketing of r_n).
Interval stirling_bracket(long n, int N);

/// Scans N upward for the narrowest Stirling bracket at n (the asymptotic
/// series shrinks then diverges; the minimal-width N is reported).
struct BracketScan {
    int best_N = 0;
    Interval best;
};
BracketScan stirling_bracket_scan(long n, int N_cap = 512);

/// Certified enclosure of r_n = sum_{p>=n} eps_p: exact epsilon enclosures
/// for p = n..P plus a tail bracket for r_{P+1} (the Robbins bracket
/// intersected with an adaptive Stirling bracket), with P doubled from
/// max(n, 8) until the width target is met. Successive enclosures are
/// intersected, so refinements nest. Throws ResourceError after
/// max_doublings unsuccessful iterations.
Interval binet_interval(long n, const Rational& width_target, int max_doublings = 64);

} // namespace stirlingcf

#endif
