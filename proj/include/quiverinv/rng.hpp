#ifndef QUIVERINV_RNG_HPP
#define QUIVERINV_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace quiverinv {

// splitmix64: the repo-wide PRNG. State is caller-owned and passed
// explicitly, so parallel trials can derive independent streams from
// (seed, index) without touching shared state.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in (0, 1]; never returns 0 so it is safe under log().
    double uniform() {
        return static_cast<double>((next() >> 11) + 1) * 0x1p-53;
    }

    // Standard complex Gaussian, E|z|^2 = 1: sqrt(-ln u) * exp(2*pi*i*v).
    std::complex<double> complex_gaussian() {
        const double u = uniform();
        const double v = uniform();
        const double r = std::sqrt(-std::log(u));
        return std::polar(r, 2.0 * std::numbers::pi * v);
    }

    std::uint64_t state() const { return state_; }

private:
    std::uint64_t state_;
};

// Trial k of a run seeded with s uses the stream seeded by the k-th splitmix
// output after s. This is the documented (seed, trial index) derivation; it
// makes parallel and serial execution produce identical per-trial streams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 g(seed + index * 0x9e3779b97f4a7c15ULL);
    return g.next();
}

}  // namespace quiverinv

#endif
