// Multi-qudit state containers and tensor operations: partial trace,
// partial transpose, Schmidt spectra. Subsystem 0 is the leftmost factor;
// flat index i = ((i0*d1 + i1)*d2 + i2)... in row-major ket order.

#pragma once

#include "entmono/linalg.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace entmono {

using Dims = std::vector<int>;

inline std::int64_t total_dim(const Dims& dims) {
    std::int64_t d = 1;
    for (int x : dims) d *= x;
    return d;
}

// Ordered split of subsystem indices into two nonempty disjoint groups
// covering {0,..,k-1}.
struct Bipartition {
    std::vector<int> side_a;
    std::vector<int> side_b;

    Bipartition(std::vector<int> a, std::vector<int> b);

    // side_b = complement of side_a
    static Bipartition versus_rest(const std::vector<int>& a, int subsystem_count);

    void validate(const Dims& dims) const;
    std::int64_t dim_a(const Dims& dims) const;
    std::int64_t dim_b(const Dims& dims) const;
};

class PureState {
  public:
    // Renormalizes inputs off-norm by at most tol::renorm; rejects worse.
    PureState(Dims dims, Vector amplitudes);

    const Dims& dims() const { return dims_; }
    const Vector& amplitudes() const { return amps_; }
    int subsystem_count() const { return static_cast<int>(dims_.size()); }
    std::int64_t dim() const { return amps_.size(); }

  private:
    Dims dims_;
    Vector amps_;
};

class MixedState {
  public:
    // Checks hermiticity, unit trace and positivity (eigenvalues >= -1e-9).
    MixedState(Dims dims, Matrix rho);

    const Dims& dims() const { return dims_; }
    const Matrix& matrix() const { return rho_; }
    int subsystem_count() const { return static_cast<int>(dims_.size()); }
    std::int64_t dim() const { return rho_.rows(); }

  private:
    Dims dims_;
    Matrix rho_;
};

MixedState pure_to_mixed(const PureState& psi);

// Reduced state on `keep` (original relative order preserved).
MixedState partial_trace(const MixedState& rho, const std::vector<int>& keep);
MixedState partial_trace(const PureState& psi, const std::vector<int>& keep);

// Transposition of the side_a composite index. Hermiticity and trace are
// preserved; positivity generally is not.
Matrix partial_transpose(const MixedState& rho, const Bipartition& part);

// The lambda_i of the Schmidt decomposition (squared Schmidt coefficients),
// descending; count = min of the two side dimensions; sum = 1.
std::vector<double> schmidt_coefficients(const PureState& psi, const Bipartition& part);

// Amplitudes reshaped to a dim_a x dim_b matrix after permuting subsystems
// to (side_a..., side_b...) order. Schmidt spectra are its squared singular
// values; shared with the roof optimizer.
Matrix bipartition_matrix(const Vector& amps, const Dims& dims, const Bipartition& part);

// Index permutation sending the (side_a..., side_b...) ordering back onto
// flat row-major indices: out[flat_target] = flat_source.
std::vector<std::int64_t> bipartition_index_map(const Dims& dims, const Bipartition& part);

}  // namespace entmono
