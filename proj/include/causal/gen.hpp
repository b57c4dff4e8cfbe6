#ifndef CAUSAL_GEN_HPP
#define CAUSAL_GEN_HPP

#include <cstdint>

#include "causal/automorphism.hpp"
#include "causal/minkowski.hpp"
#include "causal/pl.hpp"

namespace causal::gen {

// splitmix64. Fixed constants, platform independent; the one PRNG behind
// every generated value so golden outputs are portable.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, m); m > 0. Modulo mapping, documented in the README.
    std::uint64_t below(std::uint64_t m) { return next() % m; }

    // Uniform in [lo, hi], inclusive.
    std::int64_t in(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool coin() { return (next() & 1) != 0; }

private:
    std::uint64_t state_;
};

enum class OrientationChoice { Increasing, Decreasing, Either };

struct GenParams {
    std::uint64_t seed = 0;
    int max_breakpoints = 6;
    int coord_range = 12;
    OrientationChoice orientation = OrientationChoice::Either;
};

// Params for independent trial number `trial` of a suite seeded by `base`.
inline GenParams derive(GenParams base, std::uint64_t trial) {
    base.seed += trial;
    return base;
}

// Numerator in [-range, range], denominator in [1, range].
Rational gen_rational(SplitMix64& rng, int range);

Event gen_event(SplitMix64& rng, int range);

// Stream-based forms; the GenParams forms below seed a fresh stream.
PLHomeo gen_homeo(SplitMix64& rng, const GenParams& params);
HElement gen_helement(SplitMix64& rng, const GenParams& params);
FGPair gen_fg(SplitMix64& rng, const GenParams& params);

PLHomeo gen_homeo(const GenParams& params);
HElement gen_helement(const GenParams& params);
FGPair gen_fg(const GenParams& params);

} // namespace causal::gen

#endif
