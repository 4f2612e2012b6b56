#include "entmono/states.hpp"

#include <cmath>
#include <numbers>

namespace entmono {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

void check_unit_pair(Complex a, Complex b) {
    const double n = std::norm(a) + std::norm(b);
    if (std::abs(n - 1.0) > tol::renorm)
        throw std::invalid_argument("coefficients must satisfy |a|^2+|b|^2 = 1 within 1e-6");
}

void check_unit_triple(Complex a, Complex b, Complex c) {
    const double n = std::norm(a) + std::norm(b) + std::norm(c);
    if (std::abs(n - 1.0) > tol::renorm)
        throw std::invalid_argument("coefficients must satisfy |a|^2+|b|^2+|c|^2 = 1 within 1e-6");
}

}  // namespace

Rng Rng::stream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed;
    std::uint64_t mixed = splitmix64(s);
    s = mixed ^ (index * 0xD6E8FEB86659FD93ULL + 0x2545F4914F6CDD1DULL);
    return Rng(splitmix64(s));
}

std::uint64_t Rng::next_u64() { return splitmix64(state_); }

double Rng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Box-Muller; fully specified so streams are platform-invariant.
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
}

Complex Rng::complex_normal() {
    const double re = normal(), im = normal();
    return Complex(re, im) / std::sqrt(2.0);
}

WClassCoefficients::WClassCoefficients(int n_, int d_, std::vector<std::vector<Complex>> a_)
    : n(n_), d(d_), a(std::move(a_)) {
    if (n < 2) throw std::invalid_argument("WClassCoefficients: need at least 2 parties");
    if (d < 2) throw std::invalid_argument("WClassCoefficients: local dimension must be >= 2");
    if (static_cast<int>(a.size()) != n)
        throw std::invalid_argument("WClassCoefficients: need one coefficient row per party");
    double total = 0.0;
    for (const auto& row : a) {
        if (static_cast<int>(row.size()) != d - 1)
            throw std::invalid_argument("WClassCoefficients: each row needs d-1 coefficients");
        for (Complex x : row) total += std::norm(x);
    }
    if (std::abs(total - 1.0) > tol::renorm)
        throw std::invalid_argument("WClassCoefficients: squared coefficients must sum to 1");
}

WClassCoefficients WClassCoefficients::uniform(int n, int d) {
    const double v = 1.0 / std::sqrt(static_cast<double>(n) * (d - 1));
    std::vector<std::vector<Complex>> a(n, std::vector<Complex>(d - 1, v));
    return WClassCoefficients(n, d, std::move(a));
}

PureState ghz(int n, Complex a, Complex b) {
    if (n < 2) throw std::invalid_argument("ghz: need at least 2 qubits");
    check_unit_pair(a, b);
    Vector amps = Vector::Zero(std::int64_t{1} << n);
    amps[0] = a;
    amps[amps.size() - 1] = b;
    return PureState(Dims(n, 2), std::move(amps));
}

PureState w_state(int n) {
    if (n < 2) throw std::invalid_argument("w_state: need at least 2 qubits");
    Vector amps = Vector::Zero(std::int64_t{1} << n);
    const double v = 1.0 / std::sqrt(static_cast<double>(n));
    for (int s = 0; s < n; ++s) amps[std::int64_t{1} << (n - 1 - s)] = v;
    return PureState(Dims(n, 2), std::move(amps));
}

PureState antisymmetric_333() {
    Vector amps = Vector::Zero(27);
    const double v = 1.0 / std::sqrt(6.0);
    auto idx = [](int i, int j, int k) { return (i - 1) * 9 + (j - 1) * 3 + (k - 1); };
    amps[idx(1, 2, 3)] = v;
    amps[idx(1, 3, 2)] = -v;
    amps[idx(2, 3, 1)] = v;
    amps[idx(2, 1, 3)] = -v;
    amps[idx(3, 1, 2)] = v;
    amps[idx(3, 2, 1)] = -v;
    return PureState({3, 3, 3}, std::move(amps));
}

PureState generalized_w_class(const WClassCoefficients& c) {
    const std::int64_t dim = total_dim(Dims(c.n, c.d));
    Vector amps = Vector::Zero(dim);
    for (int s = 0; s < c.n; ++s) {
        for (int i = 0; i + 1 < c.d; ++i) {
            std::int64_t idx = 0;
            for (int q = 0; q < c.n; ++q) idx = idx * c.d + (q == s ? i + 1 : 0);
            amps[idx] = c.a[s][i];
        }
    }
    return PureState(Dims(c.n, c.d), std::move(amps));
}

PureState w_vacuum_superposition(double p, const WClassCoefficients& c) {
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("w_vacuum_superposition: p must lie in [0,1]");
    PureState w = generalized_w_class(c);
    Vector amps = std::sqrt(p) * w.amplitudes();
    amps[0] += std::sqrt(1.0 - p);
    return PureState(w.dims(), std::move(amps));
}

PureState theorem1_saturating(Complex a, Complex b) {
    check_unit_pair(a, b);
    Vector amps = Vector::Zero(8);
    amps[0b010] = a;
    amps[0b100] = b;
    return PureState({2, 2, 2}, std::move(amps));
}

PureState theorem2_saturating(Complex a, Complex b, Complex c) {
    check_unit_triple(a, b, c);
    Vector amps = Vector::Zero(16);
    amps[0b0100] = a;
    amps[0b0010] = b;
    amps[0b0001] = c;
    return PureState({2, 2, 2, 2}, std::move(amps));
}

PureState theorem3_saturating(Complex a, Complex b, Complex c) {
    check_unit_triple(a, b, c);
    Vector amps = Vector::Zero(16);
    amps[0b1000] = a;
    amps[0b0010] = b;
    amps[0b0001] = c;
    return PureState({2, 2, 2, 2}, std::move(amps));
}

PureState random_pure(const Dims& dims, std::uint64_t seed) {
    const std::int64_t d = total_dim(dims);
    Rng rng = Rng::stream(seed, 0x5057524EULL);  // tag distinct from mixed-state streams
    Vector v(d);
    for (std::int64_t i = 0; i < d; ++i) v[i] = rng.complex_normal();
    v /= v.norm();
    return PureState(dims, std::move(v));
}

MixedState random_mixed(const Dims& dims, int rank, std::uint64_t seed) {
    const std::int64_t d = total_dim(dims);
    if (rank < 1 || rank > d)
        throw std::invalid_argument("random_mixed: rank must lie in [1, total dimension]");
    Rng rng = Rng::stream(seed, 0x4D585244ULL);
    Matrix v(d, rank);
    for (std::int64_t i = 0; i < d; ++i)
        for (int j = 0; j < rank; ++j) v(i, j) = rng.complex_normal();
    Matrix rho = v * v.adjoint();
    rho /= rho.trace().real();
    rho = (rho + rho.adjoint()) / 2.0;
    return MixedState(dims, std::move(rho));
}

}  // namespace entmono
