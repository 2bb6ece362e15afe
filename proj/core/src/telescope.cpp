#include "stirlingcf/telescope.hpp"

namespace stirlingcf {

const Rational& CFCoefficients::at(int m) const {
    if (m < 1 || m > size())
        throw PreconditionError("CFCoefficients::at: index out of range");
    return a[static_cast<size_t>(m - 1)];
}

DeltaState delta_init(int k) {
    RatFuncZ f = to_z_form(k);  // PreconditionError for k < 2
    const int d = f.den.degree();
    if (d < 1 || f.num.degree() != d - 1)
        throw PreconditionError("delta_init: degree hypothesis violated");
    DeltaState s;
    s.k = k;
    s.m = 0;
    s.d_k = d;
    s.delta1_prev = ZPoly();
    s.delta1 = f.num;
    s.delta2 = -f.den;
    s.delta3 = f.den.scaled(Rational(2));
    return s;
}

Rational choose_a(const DeltaState& state) {
    const Rational divisor = state.delta2.coeff(state.d_k);
    if (divisor.is_zero())
        throw AlgorithmTerminated("choose_a: zero coefficient of z^d_k in Delta2",
                                  state.k, state.m);
    if (state.delta1.degree() != state.d_k - 1)
        throw AlgorithmTerminated("choose_a: deg Delta1 != d_k - 1", state.k, state.m);
    return -(state.delta1.leading() / divisor);
}

namespace {

struct StepOutcome {
    DeltaState next;
    bool degree_ok = true;
};

StepOutcome advance(const DeltaState& s, const Rational& a) {
    const Poly two_z_plus_1{Rational(1), Rational(2)};
    DeltaState n;
    n.k = s.k;
    n.m = s.m + 1;
    n.d_k = s.d_k;
    n.delta1 = s.delta1.shifted_up() + s.delta2.scaled(a) + s.delta1_prev.scaled(a * a);
    n.delta2 = two_z_plus_1 * s.delta1 + s.delta2.scaled(a) + s.delta3.scaled(a);
    n.delta3 = -s.delta1 - s.delta3.scaled(a);
    n.delta1_prev = s.delta1;
    n.a_chosen = s.a_chosen;
    n.a_chosen.push_back(a);

    // Delta4 = Delta2 + Delta3 is algebraically dependent; recompute both
    // sides as an implementation cross-check.
    const Poly delta4 = n.delta2 + n.delta3;
    const Poly expected = s.delta1.shifted_up().scaled(Rational(2)) + s.delta2.scaled(a);
    if (!(delta4 == expected))
        throw InternalInvariantError("delta_step: Delta4 identity violated");

    const bool degree_ok = n.delta1.degree() == s.d_k - 1;
    return {std::move(n), degree_ok};
}

} // namespace

DeltaState delta_step(const DeltaState& state, const Rational& a) {
    StepOutcome out = advance(state, a);
    if (!out.degree_ok)
        throw AlgorithmTerminated("delta_step: deg Delta1 fell below d_k - 1",
                                  state.k, out.next.m);
    return std::move(out.next);
}

StepReport verify_sign(int k, int m, const ZPoly& delta1) {
    StepReport r;
    r.m = m;
    r.delta1_after = delta1;
    r.sign = sign_on_ray(delta1, Rational(1));
    if (r.sign.kind == SignKind::IdenticallyZero) {
        // No sign convention exists for a vanished Delta1; report as such.
        r.sign.kind = SignKind::Inconclusive;
    }
    const bool want_negative = (m % 2 == 1);
    r.sign_matches_conjecture =
        (r.sign.kind == SignKind::ConstantNegative && want_negative) ||
        (r.sign.kind == SignKind::ConstantPositive && !want_negative);
    if (!r.sign.constant_sign())
        r.fallback_z2 = sign_on_ray(delta1, Rational(2));
    (void)k;
    return r;
}

RunResult run_algorithm(int k, int m_max) {
    if (m_max < 1) throw PreconditionError("run_algorithm: m_max must be >= 1");
    RunResult res;
    DeltaState state = delta_init(k);
    for (int m = 1; m <= m_max; ++m) {
        Rational a;
        try {
            a = choose_a(state);
        } catch (const AlgorithmTerminated& e) {
            res.terminated = Termination{m - 1, e.what()};
            break;
        }
        StepOutcome out = advance(state, a);
        state = std::move(out.next);

        StepReport report = verify_sign(k, m, state.delta1);
        report.a_m = a;
        res.coeffs.a.push_back(a);
        res.coeffs.source_k.push_back(k);
        res.steps.push_back(std::move(report));

        if (!out.degree_ok) {
            // Remark-style truncation: a_m stays valid, the loop cannot go on.
            res.terminated = Termination{m, "deg Delta1 fell below d_k - 1"};
            break;
        }
    }
    return res;
}

StabilizationTable stabilization_table(int k_max, int m_max) {
    if (k_max < 3) throw PreconditionError("stabilization_table: k_max must be >= 3");
    if (m_max < 1) throw PreconditionError("stabilization_table: m_max must be >= 1");
    StabilizationTable t;
    t.k_max = k_max;
    t.m_max = m_max;
    for (int k = 2; k <= k_max; ++k)
        t.rows[k] = run_algorithm(k, m_max).coeffs.a;

    for (int m = 1; m <= m_max; ++m) {
        if (m + 1 > k_max) break;
        const auto& base_row = t.rows[m + 1];
        if (static_cast<int>(base_row.size()) < m) break;
        StabilizationTable::Column col;
        col.m = m;
        col.value = base_row[static_cast<size_t>(m - 1)];
        col.stabilized = true;
        for (int k = m + 1; k <= k_max; ++k) {
            const auto& row = t.rows[k];
            if (static_cast<int>(row.size()) < m ||
                !(row[static_cast<size_t>(m - 1)] == col.value)) {
                col.stabilized = false;
                col.disagreeing_k.push_back(k);
            }
        }
        t.columns.push_back(std::move(col));
        t.stabilized.a.push_back(t.columns.back().value);
        t.stabilized.source_k.push_back(m + 1);
    }
    return t;
}

CFCoefficients stabilized_coefficients(int m_max) {
    if (m_max < 1) throw PreconditionError("stabilized_coefficients: m_max must be >= 1");
    CFCoefficients c;
    for (int m = 1; m <= m_max; ++m) {
        RunResult r = run_algorithm(m + 1, m);
        if (r.terminated && r.coeffs.size() < m)
            throw AlgorithmTerminated("stabilized_coefficients: run for k = m+1 terminated",
                                      m + 1, r.coeffs.size());
        c.a.push_back(r.coeffs.a.back());
        c.source_k.push_back(m + 1);
    }
    return c;
}

} // namespace stirlingcf
