#include "causal/verify.hpp"

#include <gmpxx.h>

#include "causal/errors.hpp"

namespace causal::verify {

std::vector<Rational> GridSpec::axis() const {
    if (n < 1) throw InvariantViolation("GridSpec: n must be positive");
    if (!(t_min < t_max)) throw InvariantViolation("GridSpec: t_min must be less than t_max");
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(n));
    if (n == 1) {
        out.push_back(t_min);
        return out;
    }
    const Rational step = (t_max - t_min) / Rational(n - 1);
    for (int i = 0; i < n; ++i) out.push_back(t_min + Rational(i) * step);
    return out;
}

std::vector<Event> GridSpec::events() const {
    const std::vector<Rational> ax = axis();
    std::vector<Event> out;
    out.reserve(ax.size() * ax.size());
    for (const Rational& x : ax)
        for (const Rational& y : ax) out.push_back({x, y});
    return out;
}

namespace {

bool relation_holds(Relation rel, const Event& p, const Event& q) {
    return rel == Relation::Causal ? causally_precedes(p, q) : chronologically_precedes(p, q);
}

// Scale rationals to integers by their denominators' lcm; order-preserving.
std::vector<mpz_class> scaled(const std::vector<Rational>& values) {
    mpz_class lcm = 1;
    for (const Rational& v : values) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.denominator().get_mpz_t());
    std::vector<mpz_class> out;
    out.reserve(values.size());
    for (const Rational& v : values) out.push_back(v.numerator() * (lcm / v.denominator()));
    return out;
}

struct ConePrecomputed {
    std::vector<Event> points;
    std::vector<Event> images;
};

ConePrecomputed map_grid(const PointMap& map, const GridSpec& grid) {
    ConePrecomputed pre;
    pre.points = grid.events();
    pre.images.reserve(pre.points.size());
    for (const Event& p : pre.points) pre.images.push_back(map(p));
    return pre;
}

CheckReport<ConeWitness> cone_report(const ConePrecomputed& pre, Relation rel, long long first_bad,
                                     long long total) {
    CheckReport<ConeWitness> report;
    if (first_bad >= total) {
        report.trials = total;
        return report;
    }
    const auto n = static_cast<long long>(pre.points.size());
    const Event& p = pre.points[static_cast<std::size_t>(first_bad / n)];
    const Event& q = pre.points[static_cast<std::size_t>(first_bad % n)];
    const Event& fp = pre.images[static_cast<std::size_t>(first_bad / n)];
    const Event& fq = pre.images[static_cast<std::size_t>(first_bad % n)];
    report.passed = false;
    report.trials = first_bad + 1;
    report.first_counterexample =
        ConeWitness{first_bad, p, q, fp, fq, rel, relation_holds(rel, p, q),
                    relation_holds(rel, fp, fq)};
    return report;
}

} // namespace

CheckReport<ConeWitness> check_cone_preservation_serial(const PointMap& map, const GridSpec& grid,
                                                        Relation rel) {
    const ConePrecomputed pre = map_grid(map, grid);
    const auto n = static_cast<long long>(pre.points.size());
    const long long total = n * n;
    long long first_bad = total;
    for (long long idx = 0; idx < total; ++idx) {
        const auto a = static_cast<std::size_t>(idx / n);
        const auto b = static_cast<std::size_t>(idx % n);
        const bool expected = relation_holds(rel, pre.points[a], pre.points[b]);
        const bool actual = relation_holds(rel, pre.images[a], pre.images[b]);
        if (expected != actual) {
            first_bad = idx;
            break;
        }
    }
    return cone_report(pre, rel, first_bad, total);
}

CheckReport<ConeWitness> check_cone_preservation(const PointMap& map, const GridSpec& grid,
                                                 Relation rel) {
    const ConePrecomputed pre = map_grid(map, grid);
    const auto n = static_cast<long long>(pre.points.size());
    const long long total = n * n;

    // Null coordinates scaled to plain integers so the pair sweep compares
    // mpz values instead of rationals. In null coordinates, p rel q reads
    // u_q >= u_p and v_q <= v_p (strict on both for the chronological
    // relation).
    std::vector<Rational> pu, pv, iu, iv;
    pu.reserve(pre.points.size());
    pv.reserve(pre.points.size());
    iu.reserve(pre.points.size());
    iv.reserve(pre.points.size());
    for (const Event& p : pre.points) {
        NullCoords nc = to_null(p);
        pu.push_back(std::move(nc.u));
        pv.push_back(std::move(nc.v));
    }
    for (const Event& p : pre.images) {
        NullCoords nc = to_null(p);
        iu.push_back(std::move(nc.u));
        iv.push_back(std::move(nc.v));
    }
    const std::vector<mpz_class> su = scaled(pu);
    const std::vector<mpz_class> sv = scaled(pv);
    const std::vector<mpz_class> tu = scaled(iu);
    const std::vector<mpz_class> tv = scaled(iv);

    const bool strict = rel == Relation::Chronological;
    long long first_bad = total;

#pragma omp parallel for schedule(static) reduction(min : first_bad)
    for (long long idx = 0; idx < total; ++idx) {
        const auto a = static_cast<std::size_t>(idx / n);
        const auto b = static_cast<std::size_t>(idx % n);
        const int du = cmp(su[b], su[a]);
        const int dv = cmp(sv[b], sv[a]);
        const bool expected = strict ? (du > 0 && dv < 0) : (du >= 0 && dv <= 0);
        const int eu = cmp(tu[b], tu[a]);
        const int ev = cmp(tv[b], tv[a]);
        const bool actual = strict ? (eu > 0 && ev < 0) : (eu >= 0 && ev <= 0);
        if (expected != actual && idx < first_bad) first_bad = idx;
    }
    return cone_report(pre, rel, first_bad, total);
}

CheckReport<GroupLawWitness> check_group_axioms(const gen::GenParams& params, long long trials) {
    CheckReport<GroupLawWitness> report;
    const HElement id = identity_element();
    for (long long trial = 0; trial < trials; ++trial) {
        gen::GenParams p = gen::derive(params, static_cast<std::uint64_t>(trial));
        gen::SplitMix64 rng(p.seed);

        gen::GenParams forced = p;
        int pattern = 0;
        const auto pick = [&](int bit) {
            if (params.orientation == gen::OrientationChoice::Either) {
                const int v = (static_cast<int>(trial % 8) >> bit) & 1;
                pattern |= v << bit;
                return v == 1 ? gen::OrientationChoice::Decreasing
                              : gen::OrientationChoice::Increasing;
            }
            pattern = params.orientation == gen::OrientationChoice::Decreasing ? 7 : 0;
            return params.orientation;
        };
        forced.orientation = pick(2);
        const HElement a = gen::gen_helement(rng, forced);
        forced.orientation = pick(1);
        const HElement b = gen::gen_helement(rng, forced);
        forced.orientation = pick(0);
        const HElement c = gen::gen_helement(rng, forced);

        ++report.coverage["pattern:" + std::to_string((pattern >> 2) & 1) +
                          std::to_string((pattern >> 1) & 1) + std::to_string(pattern & 1)];
        ++report.trials;

        const auto fail = [&](const char* law) {
            report.passed = false;
            report.first_counterexample = GroupLawWitness{trial, law, a, b, c};
        };
        if (!h_equal(star(a, star(b, c)), star(star(a, b), c))) {
            fail("associativity");
            break;
        }
        if (!h_equal(star(id, a), a) || !h_equal(star(a, id), a)) {
            fail("identity");
            break;
        }
        const HElement ainv = star_inverse(a);
        if (!h_equal(star(a, ainv), id) || !h_equal(star(ainv, a), id)) {
            fail("inverse");
            break;
        }
    }
    return report;
}

CheckReport<PiCaseWitness> check_pi_homomorphism_cases(const gen::GenParams& params,
                                                       long long trials_per_case,
                                                       int events_per_trial) {
    CheckReport<PiCaseWitness> report;
    for (int pi_a = 0; pi_a < 2 && report.passed; ++pi_a) {
        for (int pi_b = 0; pi_b < 2 && report.passed; ++pi_b) {
            const int case_index = pi_a * 2 + pi_b;
            for (long long trial = 0; trial < trials_per_case; ++trial) {
                gen::GenParams p = gen::derive(
                    params, static_cast<std::uint64_t>(case_index) *
                                    static_cast<std::uint64_t>(trials_per_case) +
                                static_cast<std::uint64_t>(trial));
                gen::SplitMix64 rng(p.seed);
                gen::GenParams forced = p;
                forced.orientation = pi_a == 1 ? gen::OrientationChoice::Decreasing
                                               : gen::OrientationChoice::Increasing;
                const HElement a = gen::gen_helement(rng, forced);
                forced.orientation = pi_b == 1 ? gen::OrientationChoice::Decreasing
                                               : gen::OrientationChoice::Increasing;
                const HElement b = gen::gen_helement(rng, forced);
                const HElement product = star(a, b);

                ++report.coverage["case:" + std::to_string(pi_a) + std::to_string(pi_b)];
                ++report.trials;
                for (int k = 0; k < events_per_trial; ++k) {
                    const Event e = gen::gen_event(rng, p.coord_range);
                    const Event via_star = apply(product, e);
                    const Event via_comp = apply(a, apply(b, e));
                    if (!(via_star == via_comp)) {
                        report.passed = false;
                        report.first_counterexample =
                            PiCaseWitness{pi_a, pi_b, trial, e, via_star, via_comp};
                        break;
                    }
                }
                if (!report.passed) break;
            }
        }
    }
    return report;
}

CheckReport<EquivalenceWitness> check_theorem_equivalence(const FGPair& p, const GridSpec& grid) {
    CheckReport<EquivalenceWitness> report;
    const HElement a = from_fg(p);
    for (const Event& e : grid.events()) {
        ++report.trials;
        const Event via_standard = standard_apply(p, e);
        const Event via_pair = apply(a, e);
        if (!(via_standard == via_pair)) {
            report.passed = false;
            report.first_counterexample = EquivalenceWitness{e, via_standard, via_pair};
            break;
        }
    }
    return report;
}

NaiveCounterexample naive_counterexample() {
    const HElement a(PLHomeo::affine(-1, 0), PLHomeo::affine(-1, 0));
    const HElement b(PLHomeo::affine(2, 0), PLHomeo::affine(1, 0));
    const Event witness{1, 0};

    const Event star_image = apply(star(a, b), witness);
    const Event direct = apply(a, apply(b, witness));
    const HElement componentwise(compose(a.phi(), b.phi()), compose(a.psi(), b.psi()));
    const Event naive_image = apply(componentwise, witness);

    if (!(star_image == direct))
        throw std::logic_error("naive_counterexample: star image must match direct composition");
    if (star_image == naive_image)
        throw std::logic_error("naive_counterexample: componentwise image must differ");
    return {a, b, witness, star_image, naive_image};
}

} // namespace causal::verify
