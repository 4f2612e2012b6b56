// Dense complex linear-algebra kernel: aliases, tolerances, Hermitian
// eigendecomposition and trace norm used by every other module.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <vector>

namespace entmono {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

namespace tol {
// Structural invariants (norms, traces, hermiticity of stored states).
inline constexpr double structural = 1e-10;
// Spectral routines (eigendecompositions, Schmidt spectra).
inline constexpr double spectral = 1e-8;
// Eigenvalues in [-eig_clip, 0) are clipped to zero before square roots;
// anything more negative on a density matrix is an input error.
inline constexpr double eig_clip = 1e-9;
// Constructor inputs off-norm by at most this much are renormalized.
inline constexpr double renorm = 1e-6;
// Numerical rank cutoff for eigen-ensembles.
inline constexpr double rank_cut = 1e-12;
}  // namespace tol

inline bool all_finite(const Matrix& m) { return m.allFinite(); }
inline bool all_finite(const Vector& v) { return v.allFinite(); }

inline double hermiticity_error(const Matrix& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

struct HermitianEig {
    RealVector values;  // descending
    Matrix vectors;     // columns match values
};

// Eigendecomposition of a Hermitian matrix, eigenvalues descending.
// Rejects matrices that are non-Hermitian beyond the spectral tolerance.
HermitianEig hermitian_eig(const Matrix& m);

// Sum of singular values; for Hermitian input this equals the sum of
// absolute eigenvalues.
double trace_norm(const Matrix& m);

}  // namespace entmono
