#include "causal/gen.hpp"

#include <algorithm>
#include <vector>

namespace causal::gen {

Rational gen_rational(SplitMix64& rng, int range) {
    const long num = rng.in(-range, range);
    const long den = rng.in(1, range);
    return Rational(num, den);
}

Event gen_event(SplitMix64& rng, int range) {
    Rational x = gen_rational(rng, range);
    Rational y = gen_rational(rng, range);
    return {std::move(x), std::move(y)};
}

namespace {

Rational gen_positive_rational(SplitMix64& rng, int range) {
    const long num = rng.in(1, range);
    const long den = rng.in(1, range);
    return Rational(num, den);
}

std::vector<Rational> distinct_sorted_rationals(SplitMix64& rng, int range, std::size_t count) {
    std::vector<Rational> out;
    out.reserve(count);
    while (out.size() < count) {
        Rational r = gen_rational(rng, range);
        if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Orientation resolve(SplitMix64& rng, OrientationChoice choice) {
    switch (choice) {
        case OrientationChoice::Increasing: return Orientation::Increasing;
        case OrientationChoice::Decreasing: return Orientation::Decreasing;
        default: return rng.coin() ? Orientation::Decreasing : Orientation::Increasing;
    }
}

PLHomeo gen_homeo_oriented(SplitMix64& rng, const GenParams& params, Orientation orient) {
    const auto count = static_cast<std::size_t>(rng.in(1, params.max_breakpoints));
    std::vector<Rational> ts = distinct_sorted_rationals(rng, params.coord_range, count);
    std::vector<Rational> vs = distinct_sorted_rationals(rng, params.coord_range, count);
    if (orient == Orientation::Decreasing) std::reverse(vs.begin(), vs.end());

    std::vector<Breakpoint> bps;
    bps.reserve(count);
    for (std::size_t i = 0; i < count; ++i) bps.push_back({std::move(ts[i]), std::move(vs[i])});

    Rational left = gen_positive_rational(rng, params.coord_range);
    Rational right = gen_positive_rational(rng, params.coord_range);
    if (orient == Orientation::Decreasing) {
        left = -left;
        right = -right;
    }
    return PLHomeo(PLFunction(std::move(bps), std::move(left), std::move(right)));
}

} // namespace

PLHomeo gen_homeo(SplitMix64& rng, const GenParams& params) {
    return gen_homeo_oriented(rng, params, resolve(rng, params.orientation));
}

HElement gen_helement(SplitMix64& rng, const GenParams& params) {
    const Orientation orient = resolve(rng, params.orientation);
    PLHomeo phi = gen_homeo_oriented(rng, params, orient);
    PLHomeo psi = gen_homeo_oriented(rng, params, orient);
    return HElement(std::move(phi), std::move(psi));
}

FGPair gen_fg(SplitMix64& rng, const GenParams& params) {
    PLHomeo f = gen_homeo(rng, params);

    // Per-piece slope ratio r = j/d with |j| < d, so |g'| < |f'| holds by
    // construction on every piece of f's partition, tails included.
    const long d = std::max(params.coord_range, 2);
    const auto ratio = [&rng, d]() { return Rational(rng.in(-(d - 1), d - 1), d); };

    const auto& bps = f.fn().breakpoints();
    Rational anchor = gen_rational(rng, params.coord_range);
    std::vector<Breakpoint> gbps;
    gbps.reserve(bps.size());
    gbps.push_back({bps.front().t, std::move(anchor)});
    for (std::size_t i = 1; i < bps.size(); ++i) {
        const Rational f_slope =
            (bps[i].value - bps[i - 1].value) / (bps[i].t - bps[i - 1].t);
        Rational value = gbps.back().value + ratio() * f_slope * (bps[i].t - bps[i - 1].t);
        gbps.push_back({bps[i].t, std::move(value)});
    }
    Rational left = ratio() * f.fn().left_slope();
    Rational right = ratio() * f.fn().right_slope();
    PLFunction g(std::move(gbps), std::move(left), std::move(right));
    return FGPair(std::move(f), std::move(g));
}

PLHomeo gen_homeo(const GenParams& params) {
    SplitMix64 rng(params.seed);
    return gen_homeo(rng, params);
}

HElement gen_helement(const GenParams& params) {
    SplitMix64 rng(params.seed);
    return gen_helement(rng, params);
}

FGPair gen_fg(const GenParams& params) {
    SplitMix64 rng(params.seed);
    return gen_fg(rng, params);
}

} // namespace causal::gen
