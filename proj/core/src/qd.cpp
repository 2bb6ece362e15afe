#include "stirlingcf/qd.hpp"

#include "stirlingcf/binet.hpp"
#include "stirlingcf/telescope.hpp"

namespace stirlingcf {

QDTable qd_table(const std::vector<Rational>& c) {
    const int M = static_cast<int>(c.size());
    if (M < 2) throw PreconditionError("qd_table: need at least two coefficients");
    for (int i = 0; i < M; ++i)
        if (c[static_cast<size_t>(i)].is_zero())
            throw PreconditionError("qd_table: zero input coefficient c_" +
                                    std::to_string(i + 1));

    QDTable t;
    t.input = c;
    t.e.emplace_back(static_cast<size_t>(M), Rational(0));  // e[j][0] = 0
    t.q.emplace_back();                                      // q column 0 unused

    std::vector<Rational> qcol;
    for (int j = 0; j + 1 < M; ++j) qcol.push_back(c[j + 1] / c[j]);
    t.q.push_back(qcol);  // q[j][1], j = 0..M-2

    for (int r = 1;; ++r) {
        const auto& qr = t.q[static_cast<size_t>(r)];
        const auto& eprev = t.e[static_cast<size_t>(r - 1)];
        if (qr.size() < 2 || eprev.size() < 2) break;
        // e[j][r] needs q[j+1][r] and e[j+1][r-1]
        const int ecnt = static_cast<int>(std::min(qr.size(), eprev.size())) - 1;
        std::vector<Rational> er;
        for (int j = 0; j < ecnt; ++j)
            er.push_back(qr[j + 1] - qr[j] + eprev[j + 1]);
        t.e.push_back(er);

        // q[j][r+1] needs q[j+1][r], e[j+1][r] and divides by e[j][r]
        const int qcnt = static_cast<int>(er.size()) - 1;
        if (qcnt <= 0) break;
        std::vector<Rational> qnext;
        for (int j = 0; j < qcnt; ++j) {
            if (er[j].is_zero())
                throw QDBreakdown("qd_table: zero divisor e[" + std::to_string(j) +
                                      "][" + std::to_string(r) + "]",
                                  'e', j, r);
            qnext.push_back(qr[j + 1] * er[j + 1] / er[j]);
        }
        t.q.push_back(qnext);
    }
    return t;
}

std::vector<Rational> qd_scheme(const std::vector<Rational>& c) {
    const int M = static_cast<int>(c.size());
    QDTable t = qd_table(c);
    std::vector<Rational> b;
    b.push_back(c[0]);  // b_1 = c_1
    for (int r = 1; static_cast<int>(b.size()) < M; ++r) {
        if (static_cast<size_t>(r) >= t.q.size() || t.q[static_cast<size_t>(r)].empty())
            break;
        b.push_back(-t.q[static_cast<size_t>(r)][0]);  // b_{2r}
        if (static_cast<int>(b.size()) >= M) break;
        if (static_cast<size_t>(r) >= t.e.size() || t.e[static_cast<size_t>(r)].empty())
            break;
        b.push_back(-t.e[static_cast<size_t>(r)][0]);  // b_{2r+1}
    }
    if (static_cast<int>(b.size()) < M)
        throw InternalInvariantError("qd_scheme: rhombus shorter than expected");
    return b;
}

Conjecture2Report conjecture2_check(int M) {
    if (M < 2) throw PreconditionError("conjecture2_check: M must be >= 2");
    Conjecture2Report rep;
    rep.M = M;

    std::vector<Rational> c;
    for (int i = 1; i <= M; ++i) c.push_back(stirling_coeff(i));

    std::vector<Rational> b;
    try {
        b = qd_scheme(c);
    } catch (const QDBreakdown& e) {
        rep.truncation_reason = e.what();
    }
    std::vector<Rational> a;
    try {
        a = stabilized_coefficients(M).a;
    } catch (const AlgorithmTerminated& e) {
        rep.truncation_reason = e.what();
        a = stabilization_table(M + 1, M).stabilized.a;
    }

    rep.comparable = static_cast<int>(std::min(a.size(), b.size()));
    rep.all_equal = rep.comparable > 0;
    for (int m = 1; m <= rep.comparable; ++m) {
        Conjecture2Report::Entry e;
        e.m = m;
        e.a = a[static_cast<size_t>(m - 1)];
        e.b = b[static_cast<size_t>(m - 1)];
        e.equal = e.a == e.b;
        if (!e.equal) rep.all_equal = false;
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

} // namespace stirlingcf
