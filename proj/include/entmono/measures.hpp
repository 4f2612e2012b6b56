// Entanglement quantities: pure-state concurrence and negativity, trace-norm
// negativity, linear entropy, two-qubit closed forms, and the convex-roof
// engine (CREN, CRENOA, mixed concurrence, COA) with certified bound
// directions.

#pragma once

#include "entmono/tensor.hpp"

#include <optional>
#include <string>

namespace entmono {

enum class Bound { exact, lower, upper };

inline const char* to_string(Bound b) {
    switch (b) {
        case Bound::exact: return "exact";
        case Bound::lower: return "lower";
        default: return "upper";
    }
}

// Weighted pure-state ensemble realizing a mixed state.
struct Decomposition {
    std::vector<double> weights;
    std::vector<Vector> members;  // unit vectors, identical dims

    // max-abs residual of sum_i p_i |psi_i><psi_i| - rho
    double reconstruction_error(const Matrix& rho) const;
};

enum class RoofMeasure { concurrence, negativity };
enum class RoofObjective { minimize, maximize };

struct RoofConfig {
    int restarts = 64;
    int iterations = 500;   // stochastic proposals per restart
    int ensemble_size = 0;  // 0 = default min(2*rank, rank^2)
    double tolerance = 1e-7;
    std::uint64_t seed = 0;
    int threads = 1;  // restart-level parallelism; results are thread-invariant
};

struct MeasureValue {
    double value = 0.0;
    Bound bound = Bound::exact;
    std::optional<Decomposition> witness;
    std::int64_t evaluations = 0;

    double squared() const { return value * value; }
};

MeasureValue concurrence_pure(const PureState& psi, const Bipartition& part);
MeasureValue negativity_pure(const PureState& psi, const Bipartition& part);
MeasureValue negativity_mixed(const MixedState& rho, const Bipartition& part);

double linear_entropy(const MixedState& rho);

// Ensemble from an isometry applied to the subnormalized eigenensemble of
// rho: members psi_h ∝ sum_l V_{hl} sqrt(mu_l) |e_l>, weights the squared
// subnormalized norms. V must have orthonormal columns, one per nonzero
// eigenvalue of rho.
Decomposition hjw_decomposition(const MixedState& rho, const Matrix& isometry);

// Descending spin-flip spectrum lambda_i = sqrt eig of rho (sy⊗sy) rho*
// (sy⊗sy); the common kernel of the two-qubit closed forms.
std::vector<double> spin_flip_spectrum(const MixedState& rho);

// max(0, l1-l2-l3-l4); dims must be [2,2].
MeasureValue wootters_concurrence(const MixedState& rho);

// sum_i lambda_i; dims must be [2,2].
MeasureValue coa_closed_form(const MixedState& rho);

// Best ensemble average of `measure` over decompositions found by restarted
// local search over HJW isometries. bound = upper for minimize, lower for
// maximize; exact for rank-1 input. Deterministic for fixed cfg.seed
// regardless of cfg.threads.
MeasureValue optimize_roof(const MixedState& rho, const Bipartition& part,
                           RoofMeasure measure, RoofObjective objective,
                           const RoofConfig& cfg);

// Convex-roof extended negativity (min roof). Two-qubit cuts use the
// Wootters closed form (exact); otherwise the optimizer's upper bound.
MeasureValue cren(const MixedState& rho, const Bipartition& part, const RoofConfig& cfg);

// CREN of assistance (max roof). Two-qubit cuts use the COA closed form
// (exact); otherwise the optimizer's lower bound. With cross_check, the
// optimizer runs as well and disagreement beyond 1e-6 downgrades the result
// to the optimizer's lower bound.
MeasureValue crenoa(const MixedState& rho, const Bipartition& part, const RoofConfig& cfg,
                    bool cross_check = false);

// Mixed-state concurrence (min roof) and COA (max roof), same closed-form
// override on two-qubit cuts.
MeasureValue concurrence_mixed(const MixedState& rho, const Bipartition& part,
                               const RoofConfig& cfg);
MeasureValue coa(const MixedState& rho, const Bipartition& part, const RoofConfig& cfg);

// C^2(A|BC) - C^2(rho_AB) - C^2(rho_AC) for a 2x2xm pure state. Exact for
// m = 2; otherwise the AC term comes from the optimizer and the bound tag
// reflects the one-sided error.
MeasureValue tangle_three(const PureState& psi, const RoofConfig& cfg);

inline bool is_two_qubit_cut(const Dims& dims, const Bipartition& part) {
    return part.side_a.size() == 1 && part.side_b.size() == 1 &&
           dims[part.side_a[0]] == 2 && dims[part.side_b[0]] == 2;
}

}  // namespace entmono
