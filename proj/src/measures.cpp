#include "entmono/measures.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace entmono {

namespace {

double clipped_sqrt(double x) {
    if (x < 0.0) {
        if (x < -tol::eig_clip) throw std::invalid_argument("negative eigenvalue below -1e-9");
        return 0.0;
    }
    return std::sqrt(x);
}

// sy ⊗ sy as a real sign matrix
Matrix spin_flip_operator() {
    Matrix s = Matrix::Zero(4, 4);
    s(0, 3) = -1.0;
    s(1, 2) = 1.0;
    s(2, 1) = 1.0;
    s(3, 0) = -1.0;
    return s;
}

Matrix hermitian_sqrt(const Matrix& m) {
    HermitianEig eig = hermitian_eig(m);
    Matrix out = Matrix::Zero(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < eig.values.size(); ++i)
        out += clipped_sqrt(eig.values[i]) * eig.vectors.col(i) * eig.vectors.col(i).adjoint();
    return out;
}

}  // namespace

double Decomposition::reconstruction_error(const Matrix& rho) const {
    Matrix acc = Matrix::Zero(rho.rows(), rho.cols());
    for (size_t i = 0; i < weights.size(); ++i)
        acc += weights[i] * members[i] * members[i].adjoint();
    return (acc - rho).cwiseAbs().maxCoeff();
}

MeasureValue concurrence_pure(const PureState& psi, const Bipartition& part) {
    const auto lam = schmidt_coefficients(psi, part);
    double purity = 0.0;
    for (double l : lam) purity += l * l;
    MeasureValue mv;
    mv.value = std::sqrt(2.0 * std::max(0.0, 1.0 - purity));
    mv.bound = Bound::exact;
    mv.evaluations = 1;
    return mv;
}

MeasureValue negativity_pure(const PureState& psi, const Bipartition& part) {
    const auto lam = schmidt_coefficients(psi, part);
    double s = 0.0;
    for (double l : lam) s += clipped_sqrt(l);
    MeasureValue mv;
    mv.value = std::max(0.0, s * s - 1.0);
    mv.bound = Bound::exact;
    mv.evaluations = 1;
    return mv;
}

MeasureValue negativity_mixed(const MixedState& rho, const Bipartition& part) {
    const double tn = trace_norm(partial_transpose(rho, part));
    MeasureValue mv;
    mv.value = std::max(0.0, tn - 1.0);
    mv.bound = Bound::exact;
    mv.evaluations = 1;
    return mv;
}

double linear_entropy(const MixedState& rho) {
    const double purity = rho.matrix().squaredNorm();  // tr(rho^2) for Hermitian rho
    return std::max(0.0, 1.0 - purity);
}

Decomposition hjw_decomposition(const MixedState& rho, const Matrix& isometry) {
    HermitianEig eig = hermitian_eig(rho.matrix());
    int rank = 0;
    while (rank < eig.values.size() && eig.values[rank] > tol::rank_cut) ++rank;
    if (isometry.cols() != rank)
        throw std::invalid_argument("hjw_decomposition: isometry needs one column per nonzero eigenvalue");
    if (isometry.rows() < isometry.cols())
        throw std::invalid_argument("hjw_decomposition: isometry needs at least rank rows");
    const Matrix gram = isometry.adjoint() * isometry;
    if ((gram - Matrix::Identity(rank, rank)).cwiseAbs().maxCoeff() > tol::spectral)
        throw std::invalid_argument("hjw_decomposition: columns not orthonormal within 1e-8");

    Matrix sub(rho.dim(), rank);  // subnormalized eigenvectors sqrt(mu_l) |e_l>
    for (int l = 0; l < rank; ++l)
        sub.col(l) = std::sqrt(std::max(0.0, eig.values[l])) * eig.vectors.col(l);

    Decomposition dec;
    for (Eigen::Index h = 0; h < isometry.rows(); ++h) {
        Vector member = Vector::Zero(rho.dim());
        for (int l = 0; l < rank; ++l) member += isometry(h, l) * sub.col(l);
        const double p = member.squaredNorm();
        if (p <= 1e-14) continue;
        dec.weights.push_back(p);
        dec.members.push_back(member / std::sqrt(p));
    }
    return dec;
}

std::vector<double> spin_flip_spectrum(const MixedState& rho) {
    if (rho.dims() != Dims{2, 2})
        throw std::invalid_argument("spin_flip_spectrum: dims must be [2,2]");
    static const Matrix s = spin_flip_operator();
    const Matrix flipped = s * rho.matrix().conjugate() * s;
    const Matrix root = hermitian_sqrt(rho.matrix());
    HermitianEig eig = hermitian_eig(root * flipped * root);
    std::vector<double> lam(4);
    for (int i = 0; i < 4; ++i) lam[i] = clipped_sqrt(eig.values[i]);
    std::sort(lam.begin(), lam.end(), std::greater<>());
    return lam;
}

MeasureValue wootters_concurrence(const MixedState& rho) {
    const auto lam = spin_flip_spectrum(rho);
    MeasureValue mv;
    mv.value = std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
    mv.bound = Bound::exact;
    mv.evaluations = 1;
    return mv;
}

MeasureValue coa_closed_form(const MixedState& rho) {
    const auto lam = spin_flip_spectrum(rho);
    MeasureValue mv;
    mv.value = lam[0] + lam[1] + lam[2] + lam[3];
    mv.bound = Bound::exact;
    mv.evaluations = 1;
    return mv;
}

namespace {

MeasureValue roof_with_closed_form(const MixedState& rho, const Bipartition& part,
                                   RoofMeasure measure, RoofObjective objective,
                                   const RoofConfig& cfg, bool cross_check) {
    part.validate(rho.dims());
    if (is_two_qubit_cut(rho.dims(), part)) {
        MeasureValue closed = objective == RoofObjective::minimize
                                  ? wootters_concurrence(rho)
                                  : coa_closed_form(rho);
        if (!cross_check) return closed;
        MeasureValue opt = optimize_roof(rho, part, measure, objective, cfg);
        if (std::abs(opt.value - closed.value) <= 1e-6) {
            closed.evaluations = opt.evaluations;
            closed.witness = std::move(opt.witness);
            return closed;
        }
        return opt;  // disagreement: keep the one-sided optimizer bound
    }
    return optimize_roof(rho, part, measure, objective, cfg);
}

}  // namespace

MeasureValue cren(const MixedState& rho, const Bipartition& part, const RoofConfig& cfg) {
    return roof_with_closed_form(rho, part, RoofMeasure::negativity, RoofObjective::minimize,
                                 cfg, false);
}

MeasureValue crenoa(const MixedState& rho, const Bipartition& part, const RoofConfig& cfg,
                    bool cross_check) {
    return roof_with_closed_form(rho, part, RoofMeasure::negativity, RoofObjective::maximize,
                                 cfg, cross_check);
}

MeasureValue concurrence_mixed(const MixedState& rho, const Bipartition& part,
                               const RoofConfig& cfg) {
    return roof_with_closed_form(rho, part, RoofMeasure::concurrence, RoofObjective::minimize,
                                 cfg, false);
}

MeasureValue coa(const MixedState& rho, const Bipartition& part, const RoofConfig& cfg) {
    return roof_with_closed_form(rho, part, RoofMeasure::concurrence, RoofObjective::maximize,
                                 cfg, false);
}

MeasureValue tangle_three(const PureState& psi, const RoofConfig& cfg) {
    if (psi.subsystem_count() != 3 || psi.dims()[0] != 2 || psi.dims()[1] != 2)
        throw std::invalid_argument("tangle_three: need a 2x2xm tripartite pure state");

    const MeasureValue whole = concurrence_pure(psi, Bipartition({0}, {1, 2}));
    const MixedState rho_ab = partial_trace(psi, {0, 1});
    const MixedState rho_ac = partial_trace(psi, {0, 2});
    const MeasureValue c_ab = wootters_concurrence(rho_ab);
    const MeasureValue c_ac = psi.dims()[2] == 2
                                  ? wootters_concurrence(rho_ac)
                                  : concurrence_mixed(rho_ac, Bipartition({0}, {1}), cfg);

    MeasureValue mv;
    mv.value = std::max(0.0, whole.squared() - c_ab.squared() - c_ac.squared());
    mv.bound = c_ac.bound == Bound::exact ? Bound::exact : Bound::lower;
    mv.evaluations = whole.evaluations + c_ab.evaluations + c_ac.evaluations;
    return mv;
}

}  // namespace entmono
