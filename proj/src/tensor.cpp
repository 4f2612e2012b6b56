#include "entmono/tensor.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <numeric>
#include <set>

namespace entmono {

namespace {

void check_dims(const Dims& dims) {
    if (dims.empty()) throw std::invalid_argument("state needs at least one subsystem");
    for (int d : dims)
        if (d < 2) throw std::invalid_argument("subsystem dimensions must be >= 2");
}

void check_subset(const std::vector<int>& idx, int k, const char* who) {
    std::set<int> seen;
    for (int i : idx) {
        if (i < 0 || i >= k) throw std::out_of_range(std::string(who) + ": subsystem index out of range");
        if (!seen.insert(i).second)
            throw std::invalid_argument(std::string(who) + ": duplicate subsystem index");
    }
}

// Multi-index strides for row-major flat indexing.
std::vector<std::int64_t> strides_of(const Dims& dims) {
    std::vector<std::int64_t> s(dims.size());
    std::int64_t acc = 1;
    for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
        s[i] = acc;
        acc *= dims[i];
    }
    return s;
}

}  // namespace

Bipartition::Bipartition(std::vector<int> a, std::vector<int> b)
    : side_a(std::move(a)), side_b(std::move(b)) {
    if (side_a.empty() || side_b.empty())
        throw std::invalid_argument("Bipartition: both sides must be nonempty");
}

Bipartition Bipartition::versus_rest(const std::vector<int>& a, int subsystem_count) {
    std::set<int> in_a(a.begin(), a.end());
    std::vector<int> b;
    for (int i = 0; i < subsystem_count; ++i)
        if (!in_a.count(i)) b.push_back(i);
    return Bipartition(a, b);
}

void Bipartition::validate(const Dims& dims) const {
    const int k = static_cast<int>(dims.size());
    check_subset(side_a, k, "Bipartition");
    check_subset(side_b, k, "Bipartition");
    std::set<int> all(side_a.begin(), side_a.end());
    for (int i : side_b)
        if (!all.insert(i).second)
            throw std::invalid_argument("Bipartition: sides not disjoint");
    if (static_cast<int>(all.size()) != k)
        throw std::invalid_argument("Bipartition: sides must cover every subsystem");
}

std::int64_t Bipartition::dim_a(const Dims& dims) const {
    std::int64_t d = 1;
    for (int i : side_a) d *= dims[i];
    return d;
}

std::int64_t Bipartition::dim_b(const Dims& dims) const {
    std::int64_t d = 1;
    for (int i : side_b) d *= dims[i];
    return d;
}

PureState::PureState(Dims dims, Vector amplitudes)
    : dims_(std::move(dims)), amps_(std::move(amplitudes)) {
    check_dims(dims_);
    if (amps_.size() != total_dim(dims_))
        throw std::invalid_argument("PureState: amplitude count does not match dims");
    if (!all_finite(amps_)) throw std::invalid_argument("PureState: non-finite amplitudes");
    const double n = amps_.norm();
    if (std::abs(n - 1.0) > tol::renorm)
        throw std::invalid_argument("PureState: norm deviates from 1 by more than 1e-6");
    amps_ /= n;
}

MixedState::MixedState(Dims dims, Matrix rho) : dims_(std::move(dims)), rho_(std::move(rho)) {
    check_dims(dims_);
    const std::int64_t d = total_dim(dims_);
    if (rho_.rows() != d || rho_.cols() != d)
        throw std::invalid_argument("MixedState: matrix side does not match dims");
    if (!all_finite(rho_)) throw std::invalid_argument("MixedState: non-finite entries");
    if (hermiticity_error(rho_) > tol::structural)
        throw std::invalid_argument("MixedState: matrix not Hermitian within 1e-10");
    if (std::abs(rho_.trace().real() - 1.0) > tol::structural ||
        std::abs(rho_.trace().imag()) > tol::structural)
        throw std::invalid_argument("MixedState: trace differs from 1 beyond 1e-10");
    Eigen::SelfAdjointEigenSolver<Matrix> es((rho_ + rho_.adjoint()) / 2.0,
                                             Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -tol::eig_clip)
        throw std::invalid_argument("MixedState: negative eigenvalue below -1e-9");
}

MixedState pure_to_mixed(const PureState& psi) {
    const Vector& v = psi.amplitudes();
    return MixedState(psi.dims(), v * v.adjoint());
}

namespace {

Matrix partial_trace_impl(const Matrix& rho, const Dims& dims, const std::vector<int>& keep) {
    const int k = static_cast<int>(dims.size());
    check_subset(keep, k, "partial_trace");
    if (keep.empty()) throw std::invalid_argument("partial_trace: keep set must be nonempty");

    std::vector<int> keep_sorted(keep);
    std::sort(keep_sorted.begin(), keep_sorted.end());
    std::vector<int> traced;
    for (int i = 0; i < k; ++i)
        if (!std::binary_search(keep_sorted.begin(), keep_sorted.end(), i)) traced.push_back(i);

    const auto strides = strides_of(dims);
    std::int64_t dk = 1, dt = 1;
    for (int i : keep_sorted) dk *= dims[i];
    for (int i : traced) dt *= dims[i];

    // flat offsets of every kept and traced multi-index
    std::vector<std::int64_t> keep_off(dk, 0), tr_off(dt, 0);
    {
        std::vector<int> mi(keep_sorted.size(), 0);
        for (std::int64_t x = 0; x < dk; ++x) {
            std::int64_t off = 0;
            for (size_t j = 0; j < keep_sorted.size(); ++j) off += mi[j] * strides[keep_sorted[j]];
            keep_off[x] = off;
            for (int j = static_cast<int>(mi.size()) - 1; j >= 0; --j) {
                if (++mi[j] < dims[keep_sorted[j]]) break;
                mi[j] = 0;
            }
        }
        std::vector<int> ti(traced.size(), 0);
        for (std::int64_t x = 0; x < dt; ++x) {
            std::int64_t off = 0;
            for (size_t j = 0; j < traced.size(); ++j) off += ti[j] * strides[traced[j]];
            tr_off[x] = off;
            for (int j = static_cast<int>(ti.size()) - 1; j >= 0; --j) {
                if (++ti[j] < dims[traced[j]]) break;
                ti[j] = 0;
            }
        }
    }

    Matrix out = Matrix::Zero(dk, dk);
    for (std::int64_t r = 0; r < dk; ++r)
        for (std::int64_t c = 0; c < dk; ++c) {
            Complex acc = 0.0;
            for (std::int64_t t = 0; t < dt; ++t)
                acc += rho(keep_off[r] + tr_off[t], keep_off[c] + tr_off[t]);
            out(r, c) = acc;
        }
    return out;
}

Dims kept_dims(const Dims& dims, const std::vector<int>& keep) {
    std::vector<int> ks(keep);
    std::sort(ks.begin(), ks.end());
    Dims out;
    for (int i : ks) out.push_back(dims[i]);
    return out;
}

}  // namespace

MixedState partial_trace(const MixedState& rho, const std::vector<int>& keep) {
    return MixedState(kept_dims(rho.dims(), keep),
                      partial_trace_impl(rho.matrix(), rho.dims(), keep));
}

MixedState partial_trace(const PureState& psi, const std::vector<int>& keep) {
    const Vector& v = psi.amplitudes();
    return MixedState(kept_dims(psi.dims(), keep),
                      partial_trace_impl(v * v.adjoint(), psi.dims(), keep));
}

Matrix partial_transpose(const MixedState& rho, const Bipartition& part) {
    part.validate(rho.dims());
    const Dims& dims = rho.dims();
    const auto strides = strides_of(dims);
    const std::int64_t d = rho.dim();
    const std::int64_t da = part.dim_a(dims);

    // offsets of side_a multi-indices in the flat index
    std::vector<std::int64_t> a_off(da, 0);
    {
        std::vector<int> mi(part.side_a.size(), 0);
        for (std::int64_t x = 0; x < da; ++x) {
            std::int64_t off = 0;
            for (size_t j = 0; j < part.side_a.size(); ++j) off += mi[j] * strides[part.side_a[j]];
            a_off[x] = off;
            for (int j = static_cast<int>(mi.size()) - 1; j >= 0; --j) {
                if (++mi[j] < dims[part.side_a[j]]) break;
                mi[j] = 0;
            }
        }
    }
    std::int64_t a_mask_dim = da;
    std::vector<std::int64_t> rest_off;  // flat offsets with side_a digits zeroed
    {
        // enumerate all flat indices whose side_a digits are zero
        std::vector<bool> is_a(dims.size(), false);
        for (int i : part.side_a) is_a[i] = true;
        for (std::int64_t f = 0; f < d; ++f) {
            bool zero_a = true;
            for (size_t j = 0; j < dims.size() && zero_a; ++j)
                if (is_a[j] && (f / strides[j]) % dims[j] != 0) zero_a = false;
            if (zero_a) rest_off.push_back(f);
        }
    }

    Matrix out(d, d);
    for (std::int64_t ra = 0; ra < a_mask_dim; ++ra)
        for (std::int64_t ca = 0; ca < a_mask_dim; ++ca)
            for (std::int64_t rb : rest_off)
                for (std::int64_t cb : rest_off)
                    out(a_off[ra] + rb, a_off[ca] + cb) = rho.matrix()(a_off[ca] + rb, a_off[ra] + cb);
    return out;
}

std::vector<std::int64_t> bipartition_index_map(const Dims& dims, const Bipartition& part) {
    part.validate(dims);
    const auto strides = strides_of(dims);
    std::vector<int> order(part.side_a);
    order.insert(order.end(), part.side_b.begin(), part.side_b.end());

    const std::int64_t d = total_dim(dims);
    std::vector<std::int64_t> map(d);
    std::vector<int> mi(order.size(), 0);
    for (std::int64_t x = 0; x < d; ++x) {
        std::int64_t src = 0;
        for (size_t j = 0; j < order.size(); ++j) src += mi[j] * strides[order[j]];
        map[x] = src;
        for (int j = static_cast<int>(mi.size()) - 1; j >= 0; --j) {
            if (++mi[j] < dims[order[j]]) break;
            mi[j] = 0;
        }
    }
    return map;
}

Matrix bipartition_matrix(const Vector& amps, const Dims& dims, const Bipartition& part) {
    const auto map = bipartition_index_map(dims, part);
    const std::int64_t da = part.dim_a(dims), db = part.dim_b(dims);
    Matrix m(da, db);
    for (std::int64_t i = 0; i < da; ++i)
        for (std::int64_t j = 0; j < db; ++j) m(i, j) = amps[map[i * db + j]];
    return m;
}

std::vector<double> schmidt_coefficients(const PureState& psi, const Bipartition& part) {
    part.validate(psi.dims());
    const Matrix m = bipartition_matrix(psi.amplitudes(), psi.dims(), part);
    Eigen::JacobiSVD<Matrix> svd(m);
    const auto& s = svd.singularValues();
    std::vector<double> lam(s.size());
    for (Eigen::Index i = 0; i < s.size(); ++i) lam[i] = s[i] * s[i];
    std::sort(lam.begin(), lam.end(), std::greater<>());
    return lam;
}

}  // namespace entmono
