#ifndef STIRLINGCF_QD_HPP
#define STIRLINGCF_QD_HPP

#include <optional>
#include <vector>

#include "stirlingcf/rational.hpp"

namespace stirlingcf {

/// Division by a vanished rhombus cell.
class QDBreakdown : public Error {
public:
    QDBreakdown(const std::string& msg, char table, int j, int r)
        : Error(msg), table(table), j(j), r(r) {}
    char table;  // 'q' or 'e'
    int j, r;
};

/// Quotient-difference rhombus over exact rationals.
///
/// q[j][1] = c_{j+2}/c_{j+1};  e[j][0] = 0;
/// e[j][r] = q[j+1][r] - q[j][r] + e[j+1][r-1];
/// q[j][r+1] = q[j+1][r] * e[j+1][r] / e[j][r].
struct QDTable {
    std::vector<Rational> input;                // c_1..c_M
    std::vector<std::vector<Rational>> q;       // q[r][j], r >= 1
    std::vector<std::vector<Rational>> e;       // e[r][j], r >= 0
};

QDTable qd_table(const std::vector<Rational>& c);

/// S-fraction coefficients from the power-series coefficients:
/// b_1 = c_1, b_{2r} = -q[0][r], b_{2r+1} = -e[0][r]. Returns b_1..b_M for
/// M = c.size(). Requires M >= 2 and all c_i nonzero.
std::vector<Rational> qd_scheme(const std::vector<Rational>& c);

/// Per-m equality of the stabilized telescoping coefficients a_m and the
/// qd-produced b_m from the Stirling series.
struct Conjecture2Report {
    int M = 0;
    int comparable = 0;  // how many m were available on both sides
    struct Entry {
        int m = 0;
        Rational a, b;
        bool equal = false;
    };
    std::vector<Entry> entries;
    bool all_equal = false;
    std::optional<std::string> truncation_reason;
};

Conjecture2Report conjecture2_check(int M);

} // namespace stirlingcf

#endif
