// Inequality and identity checkers with certified verdicts, plus the
// closed-form example suites.

#pragma once

#include "entmono/measures.hpp"
#include "entmono/states.hpp"

#include <string>

namespace entmono {

enum class Verdict { verified, consistent, violated, inconclusive };

const char* to_string(Verdict v);

struct Term {
    std::string label;
    MeasureValue value;      // unsquared; checkers square at the point of use
    bool squared = true;     // whether the term enters the inequality squared
    double coefficient = 1.0;
    double contribution() const {
        return coefficient * (squared ? value.squared() : value.value);
    }
};

// One inequality, normalized to lhs <= rhs; slack = rhs - lhs.
struct Stage {
    std::string label;
    std::vector<Term> lhs_terms;
    std::vector<Term> rhs_terms;
    bool is_identity = false;  // lhs = rhs; slack = -|residual|
    bool abs_lhs = false;      // lhs = |sum of signed contributions|
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    Verdict verdict = Verdict::inconclusive;
};

struct InequalityReport {
    std::string name;
    std::vector<Stage> stages;
    double tolerance = 0.0;
    Verdict verdict = Verdict::inconclusive;  // weakest stage verdict
    double slack = 0.0;                       // min over stages
};

// Certification rules: a stage is `verified` when every LHS term carries an
// upper/exact bound, every RHS term a lower/exact bound, and slack >=
// -tolerance; `violated` needs the reverse certificate and slack <
// -tolerance; `consistent` holds at point estimates only. An abs-valued
// LHS certifies only when all of its terms are exact.
Stage make_stage(std::string label, std::vector<Term> lhs, std::vector<Term> rhs,
                 double tolerance, bool is_identity = false, bool abs_lhs = false);

InequalityReport finalize_report(std::string name, std::vector<Stage> stages,
                                 double tolerance);

// Tolerance policy: 1e-6 when every term is exact, 1e-3 otherwise.
double report_tolerance(const std::vector<Stage>& stages);

// --- n-qubit pure-state checkers (pairwise terms via two-qubit oracles) ---
InequalityReport ckw_check(const PureState& psi, const RoofConfig& cfg);
InequalityReport coa_dual_check(const PureState& psi, const RoofConfig& cfg);
InequalityReport cren_monogamy_check(const PureState& psi, const RoofConfig& cfg);
InequalityReport crenoa_dual_check(const PureState& psi, const RoofConfig& cfg);

// --- mixed-state checkers ---
InequalityReport theorem1_check(const MixedState& rho, const RoofConfig& cfg);
InequalityReport corollary1_check(const MixedState& rho, const RoofConfig& cfg);

// --- AB|rest checkers (parties 0 and 1 play A and B) ---
InequalityReport theorem2_check(const PureState& psi, const RoofConfig& cfg);
InequalityReport theorem3_check(const PureState& psi, const RoofConfig& cfg);

// Decomposition identities C^2(A|B rest) = C_a^2(rho_AB) + C^2(rho_{A|rest})
// and the CREN twin; parties 0 (A) and 1 (B) must be qubits.
InequalityReport decomposition_identity_check(const PureState& psi, const RoofConfig& cfg);

// T(rho_A) + T(rho_B) >= T(rho_AB) >= |T(rho_A) - T(rho_B)|
InequalityReport entropy_subadditivity_check(const MixedState& rho, const Bipartition& part);

// --- closed-form example suites ---
struct SuiteRow {
    std::string suite_id;
    std::string case_label;
    std::string quantity;
    std::optional<double> paper_value;  // printed/derived reference, when one exists
    double computed_value = 0.0;
    Bound bound = Bound::exact;
    std::string provenance;  // "paper-formula" or "derived-oracle"
    bool flagged = false;    // reference and computed disagree beyond row_tolerance
    double row_tolerance = 0.0;

    double abs_diff() const {
        return paper_value ? std::abs(computed_value - *paper_value) : 0.0;
    }
};

struct SuiteResult {
    std::vector<SuiteRow> rows;
    std::vector<InequalityReport> reports;
    bool any_violation() const;
    void append(SuiteResult other);
};

struct SuiteParams {
    std::vector<int> ghz_n = {3, 4};
    std::vector<double> ghz_a = {0.6, 0.70710678118654752};
    std::vector<int> w_n = {3, 4, 5};
    std::vector<double> wvac_p = {0.3, 0.7, 1.0};
    bool wvac_include_skewed = true;  // d=3, n=3 family: uniform + skewed sets
};

SuiteResult closed_form_suite(int example_id, const SuiteParams& params,
                              const RoofConfig& cfg);

}  // namespace entmono
