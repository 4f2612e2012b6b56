// Constructors for the analyzed state families plus seeded random states.

#pragma once

#include "entmono/tensor.hpp"

#include <cstdint>

namespace entmono {

// Deterministic RNG helpers: splitmix-derived streams and an explicit
// Box-Muller normal so output is identical across platforms and threads.
struct Rng {
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    static Rng stream(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next_u64();
    double uniform();       // [0,1)
    double normal();        // standard normal
    Complex complex_normal();  // (N + iN)/sqrt(2)

  private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Coefficients a[s][i] of the generalized W-class family:
// sum over s in [0,n), i in [0,d-1) of a[s][i] |0..0 (i+1) 0..0> (level in
// slot s). Rows n, cols d-1; squared absolute values sum to 1.
struct WClassCoefficients {
    int n = 0;
    int d = 0;
    std::vector<std::vector<Complex>> a;

    WClassCoefficients(int n, int d, std::vector<std::vector<Complex>> a);
    static WClassCoefficients uniform(int n, int d);
};

PureState ghz(int n, Complex a, Complex b);
PureState w_state(int n);

// (|123> - |132> + |231> - |213> + |312> - |321>)/sqrt(6) on three qutrits,
// with basis labels 1..3 stored as local indices 0..2.
PureState antisymmetric_333();

PureState generalized_w_class(const WClassCoefficients& c);

// sqrt(p)|W_n^d> + sqrt(1-p)|0...0>
PureState w_vacuum_superposition(double p, const WClassCoefficients& c);

PureState theorem1_saturating(Complex a, Complex b);       // a|010> + b|100>
PureState theorem2_saturating(Complex a, Complex b, Complex c);  // a|0100>+b|0010>+c|0001>
PureState theorem3_saturating(Complex a, Complex b, Complex c);  // a|1000>+b|0010>+c|0001>

PureState random_pure(const Dims& dims, std::uint64_t seed);
MixedState random_mixed(const Dims& dims, int rank, std::uint64_t seed);

}  // namespace entmono
