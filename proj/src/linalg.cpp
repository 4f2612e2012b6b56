#include "entmono/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <numeric>

namespace entmono {

HermitianEig hermitian_eig(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("hermitian_eig: matrix not square");
    if (!all_finite(m)) throw std::invalid_argument("hermitian_eig: non-finite entries");
    if (hermiticity_error(m) > tol::spectral)
        throw std::invalid_argument("hermitian_eig: matrix not Hermitian within 1e-8");

    Eigen::SelfAdjointEigenSolver<Matrix> es((m + m.adjoint()) / 2.0);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("hermitian_eig: eigensolver failed");

    const auto n = m.rows();
    HermitianEig out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    // Eigen returns ascending order; flip to descending.
    for (Eigen::Index i = 0; i < n; ++i) {
        out.values[i] = es.eigenvalues()[n - 1 - i];
        out.vectors.col(i) = es.eigenvectors().col(n - 1 - i);
    }
    return out;
}

double trace_norm(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("trace_norm: matrix not square");
    if (!all_finite(m)) throw std::invalid_argument("trace_norm: non-finite entries");
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues().sum();
}

}  // namespace entmono
