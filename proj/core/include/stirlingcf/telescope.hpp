#ifndef STIRLINGCF_TELESCOPE_HPP
#define STIRLINGCF_TELESCOPE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stirlingcf/legendre.hpp"
#include "stirlingcf/sign.hpp"

namespace stirlingcf {

/// Raised when the coefficient algorithm cannot continue (zero divisor or
/// the degree of Delta1 fell below d_k - 1). Previously computed
/// coefficients remain valid output.
class AlgorithmTerminated : public Error {
public:
    AlgorithmTerminated(const std::string& msg, int k, int last_m)
        : Error(msg), k(k), last_m(last_m) {}
    int k;
    int last_m;
};

/// Rolling state of the coefficient algorithm at step m for convergent k.
///
/// After every accepted step: deg Delta1 = d_k - 1 and
/// deg Delta2 = deg Delta3 = d_k.
struct DeltaState {
    int k = 0;
    int m = 0;
    int d_k = 0;
    ZPoly delta1_prev;  // Delta1(k, m-1)
    ZPoly delta1;       // Delta1(k, m)
    ZPoly delta2;       // Delta2(k, m)
    ZPoly delta3;       // Delta3(k, m)
    std::vector<Rational> a_chosen;  // a_1 .. a_m
};

/// State at m = 0: Delta1_prev = 0, Delta1 = f*_k, Delta2 = -f_k,
/// Delta3 = 2 f_k. Throws PreconditionError when the degree hypothesis
/// (deg f*_k = d_k - 1, d_k >= 1) fails.
DeltaState delta_init(int k);

/// The unique a_{m+1} cancelling the z^{d_k} term of z*Delta1 + a*Delta2,
/// i.e. -lc(Delta1) / coeff(Delta2, d_k). Throws AlgorithmTerminated on a
/// zero divisor or when deg Delta1 != d_k - 1.
Rational choose_a(const DeltaState& state);

/// Advances one step:
///   Delta1' = z Delta1 + a Delta2 + a^2 Delta1_prev
///   Delta2' = (2z+1) Delta1 + a Delta2 + a Delta3
///   Delta3' = -Delta1 - a Delta3
/// Verifies the dependent identity Delta2' + Delta3' = 2z Delta1 + a Delta2
/// on every call. Throws AlgorithmTerminated when deg Delta1' < d_k - 1.
DeltaState delta_step(const DeltaState& state, const Rational& a);

/// Outcome of one accepted step, with its sign certificate on z >= 1.
struct StepReport {
    int m = 0;
    Rational a_m;
    ZPoly delta1_after;
    SignVerdict sign;
    bool sign_matches_conjecture = false;  // sign == (-1)^m
    /// Diagnostic: verdict on z >= 2 when the z >= 1 check is not a
    /// constant sign.
    std::optional<SignVerdict> fallback_z2;
};

/// Certifies the sign of the post-choice Delta1(k, m) on z >= 1. An
/// identically zero Delta1 is reported as Inconclusive.
StepReport verify_sign(int k, int m, const ZPoly& delta1);

/// Continued-fraction coefficients a_1, a_2, ... with per-entry provenance
/// (the k whose run produced each value).
struct CFCoefficients {
    std::vector<Rational> a;       // a[i] = a_{i+1}
    std::vector<int> source_k;

    int size() const { return static_cast<int>(a.size()); }
    const Rational& at(int m) const;  // 1-based
};

struct Termination {
    int last_m = 0;  // last step whose coefficient is valid
    std::string reason;
};

struct RunResult {
    CFCoefficients coeffs;
    std::vector<StepReport> steps;
    std::optional<Termination> terminated;
};

/// Iterates choose_a / delta_step / verify_sign until m_max or termination.
RunResult run_algorithm(int k, int m_max);

/// Coefficient grid for k = 2..k_max with per-m stabilization verdicts.
struct StabilizationTable {
    int k_max = 0;
    int m_max = 0;
    std::map<int, std::vector<Rational>> rows;  // k -> a_1.. (may be short)

    struct Column {
        int m = 0;
        /// a_m identical for every computed k >= m+1.
        bool stabilized = false;
        Rational value;                  // a_m taken from k = m+1
        std::vector<int> disagreeing_k;  // k >= m+1 with a different a_m
    };
    std::vector<Column> columns;

    /// a_m from k = m+1 for each m (the below-diagonal values).
    CFCoefficients stabilized;
};

/// Requires k_max >= 3.
StabilizationTable stabilization_table(int k_max, int m_max);

/// Convenience: the stabilized list a_1..a_m_max (a_m taken from k = m+1).
CFCoefficients stabilized_coefficients(int m_max);

} // namespace stirlingcf

#endif
