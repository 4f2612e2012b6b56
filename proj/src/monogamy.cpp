#include "entmono/monogamy.hpp"

#include <algorithm>
#include <cmath>

namespace entmono {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::verified: return "verified";
        case Verdict::consistent: return "consistent";
        case Verdict::violated: return "violated";
        default: return "inconclusive";
    }
}

namespace {

bool all_exact(const std::vector<Term>& terms) {
    return std::all_of(terms.begin(), terms.end(),
                       [](const Term& t) { return t.value.bound == Bound::exact; });
}

// Whether the reported side is certified from the given direction. A term
// with positive coefficient needs its own bound in `dir` (or exact); the
// rare negative-coefficient terms would need the opposite, and only occur
// inside abs-valued sides which certify only when exact.
bool side_certified(const std::vector<Term>& terms, Bound dir) {
    return std::all_of(terms.begin(), terms.end(), [dir](const Term& t) {
        return t.value.bound == Bound::exact || (t.coefficient >= 0 && t.value.bound == dir);
    });
}

double side_total(const std::vector<Term>& terms) {
    double s = 0.0;
    for (const Term& t : terms) s += t.contribution();
    return s;
}

void require_qubits(const PureState& psi, const char* who, int min_parties) {
    if (psi.subsystem_count() < min_parties)
        throw std::invalid_argument(std::string(who) + ": too few subsystems");
    for (int d : psi.dims())
        if (d != 2) throw std::invalid_argument(std::string(who) + ": all subsystems must be qubits");
}

Term pure_neg_term(std::string label, const PureState& psi, const Bipartition& part) {
    return {std::move(label), negativity_pure(psi, part)};
}

Term pure_conc_term(std::string label, const PureState& psi, const Bipartition& part) {
    return {std::move(label), concurrence_pure(psi, part)};
}

// Pairwise CRENOA/COA of the (i,j) marginal: closed form on qubit pairs,
// optimizer lower bound otherwise.
Term pair_assist_term(std::string label, const PureState& psi, int i, int j,
                      const RoofConfig& cfg) {
    MixedState pair = partial_trace(psi, {std::min(i, j), std::max(i, j)});
    return {std::move(label), crenoa(pair, Bipartition({0}, {1}), cfg)};
}

std::string idx_label(const char* base, int i, int j) {
    return std::string(base) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

Stage make_stage(std::string label, std::vector<Term> lhs, std::vector<Term> rhs,
                 double tolerance, bool is_identity, bool abs_lhs) {
    Stage st;
    st.label = std::move(label);
    st.lhs_terms = std::move(lhs);
    st.rhs_terms = std::move(rhs);
    st.is_identity = is_identity;
    st.abs_lhs = abs_lhs;
    st.lhs = side_total(st.lhs_terms);
    if (abs_lhs) st.lhs = std::abs(st.lhs);
    st.rhs = side_total(st.rhs_terms);

    if (is_identity) {
        const double resid = std::abs(st.rhs - st.lhs);
        st.slack = -resid;
        const bool exact = all_exact(st.lhs_terms) && all_exact(st.rhs_terms);
        if (resid <= tolerance)
            st.verdict = exact ? Verdict::verified : Verdict::consistent;
        else
            st.verdict = exact ? Verdict::violated : Verdict::inconclusive;
        return st;
    }

    st.slack = st.rhs - st.lhs;
    const bool lhs_upper = st.abs_lhs ? all_exact(st.lhs_terms)
                                      : side_certified(st.lhs_terms, Bound::upper);
    const bool lhs_lower = st.abs_lhs ? all_exact(st.lhs_terms)
                                      : side_certified(st.lhs_terms, Bound::lower);
    const bool rhs_upper = side_certified(st.rhs_terms, Bound::upper);
    const bool rhs_lower = side_certified(st.rhs_terms, Bound::lower);
    if (st.slack >= -tolerance)
        st.verdict = (lhs_upper && rhs_lower) ? Verdict::verified : Verdict::consistent;
    else
        st.verdict = (lhs_lower && rhs_upper) ? Verdict::violated : Verdict::inconclusive;
    return st;
}

InequalityReport finalize_report(std::string name, std::vector<Stage> stages, double tolerance) {
    InequalityReport rep;
    rep.name = std::move(name);
    rep.stages = std::move(stages);
    rep.tolerance = tolerance;
    rep.verdict = Verdict::verified;
    rep.slack = rep.stages.empty() ? 0.0 : rep.stages.front().slack;
    auto weaker = [](Verdict a, Verdict b) {
        auto rank = [](Verdict v) {
            switch (v) {
                case Verdict::verified: return 0;
                case Verdict::consistent: return 1;
                case Verdict::inconclusive: return 2;
                default: return 3;
            }
        };
        return rank(a) >= rank(b) ? a : b;
    };
    for (const Stage& st : rep.stages) {
        rep.verdict = weaker(rep.verdict, st.verdict);
        rep.slack = std::min(rep.slack, st.slack);
    }
    return rep;
}

double report_tolerance(const std::vector<Stage>& stages) {
    for (const Stage& st : stages)
        if (!all_exact(st.lhs_terms) || !all_exact(st.rhs_terms)) return 1e-3;
    return 1e-6;
}

InequalityReport ckw_check(const PureState& psi, const RoofConfig& cfg) {
    (void)cfg;
    require_qubits(psi, "ckw_check", 3);
    const int n = psi.subsystem_count();
    std::vector<Term> lhs;
    for (int j = 1; j < n; ++j) {
        MixedState pair = partial_trace(psi, {0, j});
        lhs.push_back({idx_label("C^2", 0, j), wootters_concurrence(pair)});
    }
    std::vector<Term> rhs{pure_conc_term("C^2(0|rest)", psi, Bipartition::versus_rest({0}, n))};
    double tolv = 1e-6;
    std::vector<Stage> stages{make_stage("sum of pairwise C^2 <= C^2(0|rest)", std::move(lhs),
                                         std::move(rhs), tolv)};
    return finalize_report("ckw", std::move(stages), tolv);
}

InequalityReport coa_dual_check(const PureState& psi, const RoofConfig& cfg) {
    (void)cfg;
    require_qubits(psi, "coa_dual_check", 3);
    const int n = psi.subsystem_count();
    std::vector<Term> lhs{pure_conc_term("C^2(0|rest)", psi, Bipartition::versus_rest({0}, n))};
    std::vector<Term> rhs;
    for (int j = 1; j < n; ++j) {
        MixedState pair = partial_trace(psi, {0, j});
        rhs.push_back({idx_label("Ca^2", 0, j), coa_closed_form(pair)});
    }
    double tolv = 1e-6;
    std::vector<Stage> stages{make_stage("C^2(0|rest) <= sum of pairwise Ca^2", std::move(lhs),
                                         std::move(rhs), tolv)};
    return finalize_report("coa-dual", std::move(stages), tolv);
}

InequalityReport cren_monogamy_check(const PureState& psi, const RoofConfig& cfg) {
    (void)cfg;
    require_qubits(psi, "cren_monogamy_check", 3);
    const int n = psi.subsystem_count();
    std::vector<Term> lhs;
    for (int j = 1; j < n; ++j) {
        MixedState pair = partial_trace(psi, {0, j});
        lhs.push_back({idx_label("Nc^2", 0, j), wootters_concurrence(pair)});
    }
    std::vector<Term> rhs{pure_neg_term("N^2(0|rest)", psi, Bipartition::versus_rest({0}, n))};
    double tolv = 1e-6;
    std::vector<Stage> stages{make_stage("sum of pairwise Nc^2 <= N^2(0|rest)", std::move(lhs),
                                         std::move(rhs), tolv)};
    return finalize_report("cren", std::move(stages), tolv);
}

InequalityReport crenoa_dual_check(const PureState& psi, const RoofConfig& cfg) {
    (void)cfg;
    require_qubits(psi, "crenoa_dual_check", 3);
    const int n = psi.subsystem_count();
    std::vector<Term> lhs{pure_neg_term("N^2(0|rest)", psi, Bipartition::versus_rest({0}, n))};
    std::vector<Term> rhs;
    for (int j = 1; j < n; ++j) {
        MixedState pair = partial_trace(psi, {0, j});
        rhs.push_back({idx_label("Na^2", 0, j), coa_closed_form(pair)});
    }
    double tolv = 1e-6;
    std::vector<Stage> stages{make_stage("N^2(0|rest) <= sum of pairwise Na^2", std::move(lhs),
                                         std::move(rhs), tolv)};
    return finalize_report("crenoa-dual", std::move(stages), tolv);
}

InequalityReport theorem1_check(const MixedState& rho, const RoofConfig& cfg) {
    if (rho.dims() != Dims{2, 2, 2})
        throw std::invalid_argument("theorem1_check: dims must be [2,2,2]");
    std::vector<Term> lhs{{"Na^2(0|12)", crenoa(rho, Bipartition({0}, {1, 2}), cfg)}};
    std::vector<Term> rhs{{"Na^2(1|02)", crenoa(rho, Bipartition({1}, {0, 2}), cfg)},
                          {"Na^2(2|01)", crenoa(rho, Bipartition({2}, {0, 1}), cfg)}};
    std::vector<Stage> st;
    st.push_back(make_stage("Na^2(0|12) <= Na^2(1|02) + Na^2(2|01)", std::move(lhs),
                            std::move(rhs), 0.0));
    const double tolv = report_tolerance(st);
    st[0] = make_stage(st[0].label, st[0].lhs_terms, st[0].rhs_terms, tolv);
    return finalize_report("theorem1", std::move(st), tolv);
}

InequalityReport corollary1_check(const MixedState& rho, const RoofConfig& cfg) {
    const int n = rho.subsystem_count();
    if (n < 3) throw std::invalid_argument("corollary1_check: need at least 3 qubits");
    for (int d : rho.dims())
        if (d != 2) throw std::invalid_argument("corollary1_check: all subsystems must be qubits");

    std::vector<Term> cuts;  // Na^2(i|rest), i = 0..n-1
    for (int i = 0; i < n; ++i)
        cuts.push_back({"Na^2(" + std::to_string(i) + "|rest)",
                        crenoa(rho, Bipartition::versus_rest({i}, n), cfg)});

    std::vector<Term> mid(cuts.begin() + 1, cuts.end());
    std::vector<Term> pairs;
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            MixedState pair = partial_trace(rho, {std::min(i, j), std::max(i, j)});
            pairs.push_back({idx_label("Na^2", i, j), coa_closed_form(pair)});
        }

    std::vector<Stage> st;
    st.push_back(make_stage("Na^2(0|rest) <= sum_i Na^2(i|rest)", {cuts[0]}, mid, 0.0));
    st.push_back(make_stage("sum_i Na^2(i|rest) <= sum_ij Na^2(i,j)", mid, std::move(pairs), 0.0));
    const double tolv = report_tolerance(st);
    st[0] = make_stage(st[0].label, st[0].lhs_terms, st[0].rhs_terms, tolv);
    st[1] = make_stage(st[1].label, st[1].lhs_terms, st[1].rhs_terms, tolv);
    return finalize_report("corollary1", std::move(st), tolv);
}

InequalityReport theorem2_check(const PureState& psi, const RoofConfig& cfg) {
    const int n = psi.subsystem_count();
    if (n < 3) throw std::invalid_argument("theorem2_check: need at least 3 subsystems");

    std::vector<Term> lhs{pure_neg_term("N^2(01|rest)", psi, Bipartition::versus_rest({0, 1}, n))};
    std::vector<Term> rhs;
    Term ab = pair_assist_term("Na^2(0,1)", psi, 0, 1, cfg);
    ab.coefficient = 2.0;
    rhs.push_back(std::move(ab));
    for (int i = 2; i < n; ++i) {
        rhs.push_back(pair_assist_term(idx_label("Na^2", 0, i), psi, 0, i, cfg));
        rhs.push_back(pair_assist_term(idx_label("Na^2", 1, i), psi, 1, i, cfg));
    }
    std::vector<Stage> st;
    st.push_back(make_stage("N^2(01|rest) <= 2Na^2(01) + sum Na^2(0i) + sum Na^2(1i)",
                            std::move(lhs), std::move(rhs), 0.0));
    const double tolv = report_tolerance(st);
    st[0] = make_stage(st[0].label, st[0].lhs_terms, st[0].rhs_terms, tolv);
    return finalize_report("theorem2", std::move(st), tolv);
}

InequalityReport theorem3_check(const PureState& psi, const RoofConfig& cfg) {
    const int n = psi.subsystem_count();
    if (n < 3) throw std::invalid_argument("theorem3_check: need at least 3 subsystems");

    std::vector<Term> lhs;
    for (int i = 2; i < n; ++i) {
        lhs.push_back(pair_assist_term(idx_label("Na^2", 0, i), psi, 0, i, cfg));
        Term bc = pair_assist_term(idx_label("Na^2", 1, i), psi, 1, i, cfg);
        bc.coefficient = -1.0;
        lhs.push_back(std::move(bc));
    }
    std::vector<Term> rhs{pure_neg_term("N^2(01|rest)", psi, Bipartition::versus_rest({0, 1}, n))};
    std::vector<Stage> st;
    st.push_back(make_stage("|sum Na^2(0i) - sum Na^2(1i)| <= N^2(01|rest)", std::move(lhs),
                            std::move(rhs), 0.0, false, true));
    const double tolv = report_tolerance(st);
    st[0] = make_stage(st[0].label, st[0].lhs_terms, st[0].rhs_terms, tolv, false, true);
    return finalize_report("theorem3", std::move(st), tolv);
}

InequalityReport decomposition_identity_check(const PureState& psi, const RoofConfig& cfg) {
    const int n = psi.subsystem_count();
    if (n < 3) throw std::invalid_argument("decomposition_identity_check: need >= 3 subsystems");
    if (psi.dims()[0] != 2 || psi.dims()[1] != 2)
        throw std::invalid_argument("decomposition_identity_check: parties 0 and 1 must be qubits");

    std::vector<int> a_rest{0};
    for (int i = 2; i < n; ++i) a_rest.push_back(i);
    MixedState rho_ab = partial_trace(psi, {0, 1});
    MixedState rho_ar = partial_trace(psi, a_rest);
    const Bipartition a_vs_c = Bipartition::versus_rest({0}, static_cast<int>(a_rest.size()));
    const bool closed = rho_ar.dims() == Dims{2, 2};

    std::vector<Term> lhs17{pure_conc_term("C^2(0|rest)", psi, Bipartition::versus_rest({0}, n))};
    std::vector<Term> rhs17{{"Ca^2(0,1)", coa_closed_form(rho_ab)},
                            {"C^2(0|rest w/o 1)", closed ? wootters_concurrence(rho_ar)
                                                         : concurrence_mixed(rho_ar, a_vs_c, cfg)}};
    std::vector<Term> lhs18{pure_neg_term("N^2(0|rest)", psi, Bipartition::versus_rest({0}, n))};
    std::vector<Term> rhs18{{"Na^2(0,1)", coa_closed_form(rho_ab)},
                            {"Nc^2(0|rest w/o 1)",
                             closed ? wootters_concurrence(rho_ar) : cren(rho_ar, a_vs_c, cfg)}};

    std::vector<Stage> st;
    st.push_back(make_stage("C^2(0|rest) = Ca^2(01) + C^2(0|rest w/o 1)", std::move(lhs17),
                            std::move(rhs17), 0.0, true));
    st.push_back(make_stage("N^2(0|rest) = Na^2(01) + Nc^2(0|rest w/o 1)", std::move(lhs18),
                            std::move(rhs18), 0.0, true));
    const double tolv = report_tolerance(st);
    st[0] = make_stage(st[0].label, st[0].lhs_terms, st[0].rhs_terms, tolv, true);
    st[1] = make_stage(st[1].label, st[1].lhs_terms, st[1].rhs_terms, tolv, true);
    return finalize_report("identity17", std::move(st), tolv);
}

InequalityReport entropy_subadditivity_check(const MixedState& rho, const Bipartition& part) {
    part.validate(rho.dims());
    auto entropy_term = [](std::string label, double v) {
        MeasureValue mv;
        mv.value = v;
        mv.bound = Bound::exact;
        mv.evaluations = 1;
        Term t{std::move(label), mv};
        t.squared = false;
        return t;
    };
    const double t_ab = linear_entropy(rho);
    const double t_a = linear_entropy(partial_trace(rho, part.side_a));
    const double t_b = linear_entropy(partial_trace(rho, part.side_b));

    const double tolv = 1e-9;
    std::vector<Stage> st;
    st.push_back(make_stage("T(AB) <= T(A) + T(B)", {entropy_term("T(AB)", t_ab)},
                            {entropy_term("T(A)", t_a), entropy_term("T(B)", t_b)}, tolv));
    Term diff_a = entropy_term("T(A)", t_a);
    Term diff_b = entropy_term("T(B)", t_b);
    diff_b.coefficient = -1.0;
    st.push_back(make_stage("|T(A) - T(B)| <= T(AB)", {diff_a, diff_b},
                            {entropy_term("T(AB)", t_ab)}, tolv, false, true));
    return finalize_report("entropy", std::move(st), tolv);
}

}  // namespace entmono
