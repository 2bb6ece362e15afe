#include "stirlingcf/binet.hpp"

#include <mutex>
#include <optional>
#include <vector>

namespace stirlingcf {

namespace {

std::vector<Rational>& bernoulli_cache() {
    static std::vector<Rational> cache{Rational(1)};
    return cache;
}
std::mutex bernoulli_mutex;

} // namespace

Rational bernoulli(int n) {
    if (n < 0) throw PreconditionError("bernoulli: n must be >= 0");
    std::scoped_lock lock(bernoulli_mutex);
    auto& B = bernoulli_cache();
    while (static_cast<int>(B.size()) <= n) {
        const int m = static_cast<int>(B.size());
        // B_m = -(1/(m+1)) sum_{j=0}^{m-1} C(m+1, j) B_j
        mpz_class binom = 1;  // C(m+1, 0)
        Rational sum(0);
        for (int j = 0; j < m; ++j) {
            sum += Rational(binom) * B[static_cast<size_t>(j)];
            binom *= (m + 1 - j);
            binom /= (j + 1);
        }
        B.push_back(-sum / Rational(m + 1));
    }
    return B[static_cast<size_t>(n)];
}

Rational stirling_coeff(int i) {
    if (i < 1) throw PreconditionError("stirling_coeff: i must be >= 1");
    return bernoulli(2 * i) / Rational(static_cast<long>(2 * i - 1) * (2 * i));
}

Interval epsilon_interval(long p, const Rational& width_target) {
    if (p < 1) throw PreconditionError("epsilon_interval: p must be >= 1");
    if (!(width_target > Rational(0)))
        throw PreconditionError("epsilon_interval: width target must be > 0");
    const Rational y2 = Rational(1, (2 * p + 1) * (2 * p + 1));
    const Rational one_minus_y2 = Rational(1) - y2;
    Rational partial(0);
    Rational y_pow = y2;  // y^{2J}
    long J = 1;
    while (true) {
        partial += y_pow / Rational(2 * J + 1);
        const Rational tail = y_pow * y2 / (Rational(2 * J + 3) * one_minus_y2);
        if (tail <= width_target) return Interval(partial, partial + tail);
        y_pow *= y2;
        ++J;
    }
}

Interval robbins_bracket(long n) {
    if (n < 1) throw PreconditionError("robbins_bracket: n must be >= 1");
    return Interval(Rational(1, 12 * n + 1), Rational(1, 12 * n));
}

namespace {

// Truncations S_N = sum_{i=1}^{N} c_i n^{-2i+1} built incrementally.
class StirlingTruncations {
public:
    explicit StirlingTruncations(long n) : n_(n), inv_n2_(Rational(1, n * n)) {
        pow_ = Rational(1, n);  // n^{-1}
        sum_ = Rational(0);
        next_i_ = 1;
    }

    // S_N for N = next_i_; advances by one term.
    const Rational& advance() {
        sum_ += stirling_coeff(next_i_) * pow_;
        pow_ *= inv_n2_;
        ++next_i_;
        return sum_;
    }

private:
    long n_;
    Rational inv_n2_;
    Rational pow_;
    Rational sum_;
    int next_i_;
};

Interval ordered(const Rational& a, const Rational& b) {
    return a <= b ? Interval(a, b) : Interval(b, a);
}

} // namespace

Interval stirling_bracket(long n, int N) {
    if (n < 1) throw PreconditionError("stirling_bracket: n must be >= 1");
    if (N < 1) throw PreconditionError("stirling_bracket: N must be >= 1");
    StirlingTruncations tr(n);
    Rational s_n, s_n1;
    for (int i = 1; i <= N + 1; ++i) {
        const Rational& s = tr.advance();
        if (i == N) s_n = s;
        if (i == N + 1) s_n1 = s;
    }
    return ordered(s_n, s_n1);
}

BracketScan stirling_bracket_scan(long n, int N_cap) {
    if (n < 1) throw PreconditionError("stirling_bracket_scan: n must be >= 1");
    StirlingTruncations tr(n);
    Rational prev = tr.advance();  // S_1
    std::optional<BracketScan> best;
    for (int N = 1; N <= N_cap; ++N) {
        const Rational cur = tr.advance();  // S_{N+1}
        Interval bracket = ordered(prev, cur);
        if (!best || bracket.width() < best->best.width()) {
            best = BracketScan{N, bracket};
        } else if (N > best->best_N + 3) {
            break;  // past the turning point of the asymptotic series
        }
        prev = cur;
    }
    return *best;
}

namespace {

// Tail bracket for r_n: Robbins always, sharpened by the narrowest Stirling
// bracket not wider than needed (stopping early once budget is met).
Interval tail_bracket(long n, const Rational& budget) {
    Interval tail = robbins_bracket(n);
    StirlingTruncations tr(n);
    Rational prev = tr.advance();
    std::optional<Interval> best;
    int best_N = 0;
    for (int N = 1; N <= 512; ++N) {
        const Rational cur = tr.advance();
        Interval bracket = ordered(prev, cur);
        prev = cur;
        if (!best || bracket.width() < best->width()) {
            best = bracket;
            best_N = N;
            if (best->width() <= budget) break;
        } else if (N > best_N + 3) {
            break;
        }
    }
    // Both bracket r_n; a disjoint pair would falsify the sign-bracketing
    // property of the asymptotic series.
    if (best) {
        if (!tail.intersects(*best))
            throw InternalInvariantError("tail_bracket: Robbins and Stirling brackets disjoint");
        tail = tail.intersect(*best);
    }
    return tail;
}

} // namespace

Interval binet_interval(long n, const Rational& width_target, int max_doublings) {
    if (n < 1) throw PreconditionError("binet_interval: n must be >= 1");
    if (!(width_target > Rational(0)))
        throw PreconditionError("binet_interval: width target must be > 0");

    long P = n > 8 ? n : 8;
    std::optional<Interval> best;
    for (int iter = 0; iter <= max_doublings; ++iter) {
        const Rational per_term = width_target / Rational(2 * (P - n + 2));
        Interval sum(Rational(0), Rational(0));
        for (long p = n; p <= P; ++p) sum += epsilon_interval(p, per_term);
        sum += tail_bracket(P + 1, width_target / Rational(2));

        if (best) {
            if (!best->intersects(sum))
                throw InternalInvariantError("binet_interval: successive enclosures disjoint");
            best = best->intersect(sum);
        } else {
            best = sum;
        }
        if (best->width() <= width_target) return *best;
        if (P > (1L << 40))
            throw ResourceError("binet_interval: width target unattainable", *best);
        P *= 2;
    }
    throw ResourceError("binet_interval: iteration cap reached", *best);
}

} // namespace stirlingcf
