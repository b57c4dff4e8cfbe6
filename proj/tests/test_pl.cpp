#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "causal/errors.hpp"
#include "causal/gen.hpp"
#include "causal/pl.hpp"
#include "oracle.hpp"

using namespace causal;

namespace {

PLFunction vee() {
    // |t| with tails -1, 1.
    return PLFunction({{0, 0}}, -1, 1);
}

PLFunction zigzag() {
    return PLFunction({{-2, 1}, {0, 0}, {1, 3}, {4, 3}}, Rational(1, 2), -2);
}

} // namespace

TEST_CASE("constructor enforces at least one breakpoint and increasing abscissae") {
    CHECK_THROWS_AS(PLFunction({}, 1, 1), InvariantViolation);
    CHECK_THROWS_AS(PLFunction({{0, 0}, {0, 1}}, 1, 1), InvariantViolation);
    CHECK_THROWS_AS(PLFunction({{1, 0}, {0, 1}}, 1, 1), InvariantViolation);
    CHECK_NOTHROW(PLFunction({{0, 0}}, 1, 1));
}

TEST_CASE("evaluation matches slope accumulation on probe and random points") {
    for (const PLFunction& p : {vee(), zigzag(), PLFunction::affine(Rational(-2, 3), 5)}) {
        for (const Rational& t : oracle::probe_points(p)) CHECK(p(t) == oracle::eval_by_accumulation(p, t));
    }
    gen::SplitMix64 rng(11);
    gen::GenParams params;
    for (int i = 0; i < 50; ++i) {
        const PLHomeo h = gen::gen_homeo(rng, params);
        for (int k = 0; k < 10; ++k) {
            const Rational t = oracle::random_rational(rng);
            CHECK(h(t) == oracle::eval_by_accumulation(h.fn(), t));
        }
    }
}

TEST_CASE("evaluation at known points") {
    const PLFunction z = zigzag();
    CHECK(z(Rational(-2)) == Rational(1));
    CHECK(z(Rational(-1)) == Rational(1, 2));
    CHECK(z(Rational(0)) == Rational(0));
    CHECK(z(Rational(1, 2)) == Rational(3, 2));
    CHECK(z(Rational(2)) == Rational(3));
    CHECK(z(Rational(6)) == Rational(-1));
    CHECK(z(Rational(-4)) == Rational(0));
}

TEST_CASE("piece_slope covers tails and interior segments") {
    const PLFunction z = zigzag();
    CHECK(z.piece_count() == 5);
    CHECK(z.piece_slope(0) == Rational(1, 2));
    CHECK(z.piece_slope(1) == Rational(-1, 2));
    CHECK(z.piece_slope(2) == Rational(3));
    CHECK(z.piece_slope(3) == Rational(0));
    CHECK(z.piece_slope(4) == Rational(-2));
}

TEST_CASE("affine and constant helpers") {
    const PLFunction a = PLFunction::affine(Rational(2, 3), -1);
    CHECK(a(Rational(0)) == Rational(-1));
    CHECK(a(Rational(3)) == Rational(1));
    const PLFunction c = PLFunction::constant(Rational(5, 2));
    CHECK(c(Rational(-100)) == Rational(5, 2));
    CHECK(c(Rational(100)) == Rational(5, 2));
}

TEST_CASE("homeomorphisms demand nonzero piece slopes of one sign") {
    const PLFunction folded = vee();
    const PLFunction wobbly = zigzag();
    CHECK_THROWS_AS(PLHomeo{folded}, InvariantViolation);
    CHECK_THROWS_AS(PLHomeo{PLFunction::constant(1)}, InvariantViolation);
    CHECK_THROWS_AS(PLHomeo{PLFunction({{0, 0}, {1, 1}}, 1, 0)}, InvariantViolation);
    CHECK_THROWS_AS(PLHomeo{wobbly}, InvariantViolation);

    CHECK(PLHomeo::affine(2, 1).orientation() == Orientation::Increasing);
    CHECK(PLHomeo::affine(Rational(-1, 3), 0).orientation() == Orientation::Decreasing);
    CHECK(PLHomeo::identity()(Rational(7, 5)) == Rational(7, 5));
}

TEST_CASE("inverse_at is the exact preimage for both orientations") {
    const PLHomeo inc(PLFunction({{-1, -2}, {0, 0}, {2, 1}}, Rational(1, 3), 4));
    const PLHomeo dec(PLFunction({{-1, 2}, {1, 1}, {2, -3}}, Rational(-1, 2), -1));
    gen::SplitMix64 rng(12);
    for (const PLHomeo& h : {inc, dec}) {
        for (const Rational& t : oracle::probe_points(h)) {
            CHECK(h.inverse_at(h(t)) == t);
        }
        for (int k = 0; k < 40; ++k) {
            const Rational s = oracle::random_rational(rng);
            CHECK(h(h.inverse_at(s)) == s);
        }
    }
}

TEST_CASE("lincomb is pointwise a*p + b*q") {
    const PLFunction p = zigzag();
    const PLFunction q = vee();
    const Rational a(2, 3), b(-3, 2);
    const PLFunction r = lincomb(a, p, b, q);
    gen::SplitMix64 rng(13);
    for (const Rational& t : oracle::probe_points(r)) CHECK(r(t) == a * p(t) + b * q(t));
    for (int k = 0; k < 60; ++k) {
        const Rational t = oracle::random_rational(rng);
        CHECK(r(t) == a * p(t) + b * q(t));
    }
    CHECK(r.left_slope() == a * p.left_slope() + b * q.left_slope());
    CHECK(r.right_slope() == a * p.right_slope() + b * q.right_slope());
}

TEST_CASE("canonicalize drops collinear breakpoints and keeps the function") {
    // Middle breakpoint lies on the segment through its neighbors.
    const PLFunction redundant({{0, 0}, {1, 1}, {2, 2}, {3, 0}}, 2, -1);
    const PLFunction canon = canonicalize(redundant);
    CHECK(canon.size() == 3);
    for (const Rational& t : oracle::probe_points(redundant)) CHECK(canon(t) == redundant(t));
    // Repeated application is stable.
    CHECK(canonicalize(canon) == canon);
}

TEST_CASE("canonical form of a globally affine function is anchored at zero") {
    const PLFunction a({{5, 11}, {7, 15}}, 2, 2);
    const PLFunction b({{-3, -5}}, 2, 2);
    const PLFunction ca = canonicalize(a);
    const PLFunction cb = canonicalize(b);
    CHECK(ca.size() == 1);
    CHECK(ca.breakpoints().front().t == Rational(0));
    CHECK(ca.breakpoints().front().value == Rational(1));
    CHECK(ca == cb);
}

TEST_CASE("pl_equal decides pointwise equality across representations") {
    const PLFunction a({{0, 0}, {2, 2}}, 1, 1);
    const PLFunction b({{-1, -1}, {1, 1}}, 1, 1);
    CHECK(pl_equal(a, b));
    CHECK(pl_equal(a, PLFunction::affine(1, 0)));
    CHECK_FALSE(pl_equal(a, PLFunction::affine(1, 1)));
    CHECK_FALSE(pl_equal(a, PLFunction({{0, 0}, {2, 2}}, 1, 2)));

    const PLFunction v1({{0, 0}}, -1, 1);
    const PLFunction v2({{-1, 1}, {0, 0}, {1, 1}}, -1, 1);
    CHECK(pl_equal(v1, v2));
    CHECK_FALSE(pl_equal(v1, PLFunction({{-1, 1}, {0, 0}, {1, 2}}, -1, 2)));
}

TEST_CASE("compose agrees with function composition everywhere sampled") {
    gen::SplitMix64 rng(14);
    gen::GenParams inc{15, 5, 9, gen::OrientationChoice::Increasing};
    gen::GenParams dec{16, 5, 9, gen::OrientationChoice::Decreasing};
    const std::vector<PLHomeo> outers{gen::gen_homeo(inc), gen::gen_homeo(dec)};
    const std::vector<PLHomeo> inners{gen::gen_homeo(gen::derive(inc, 1)),
                                      gen::gen_homeo(gen::derive(dec, 1))};
    for (const PLHomeo& f : outers) {
        for (const PLHomeo& g : inners) {
            const PLHomeo fg = compose(f, g);
            CHECK(fg.orientation() == f.orientation() * g.orientation());
            for (const Rational& t : oracle::probe_points(fg)) CHECK(fg(t) == f(g(t)));
            for (int k = 0; k < 30; ++k) {
                const Rational t = oracle::random_rational(rng);
                CHECK(fg(t) == f(g(t)));
            }
        }
    }
}

TEST_CASE("compose with the identity is a no-op up to canonical form") {
    const PLHomeo h(PLFunction({{-1, 3}, {2, 0}}, -2, Rational(-1, 2)));
    CHECK(pl_equal(compose(h, PLHomeo::identity()), h));
    CHECK(pl_equal(compose(PLHomeo::identity(), h), h));
}

TEST_CASE("invert produces the exact inverse for both orientations") {
    const PLHomeo inc(PLFunction({{0, 0}, {1, 2}}, 1, 1));
    const PLHomeo expected_inc(PLFunction({{0, 0}, {2, 1}}, 1, 1));
    CHECK(pl_equal(invert(inc), expected_inc));

    gen::SplitMix64 rng(17);
    gen::GenParams params{18, 6, 9, gen::OrientationChoice::Either};
    for (int i = 0; i < 40; ++i) {
        const PLHomeo h = gen::gen_homeo(rng, params);
        const PLHomeo hinv = invert(h);
        CHECK(hinv.orientation() == h.orientation());
        CHECK(pl_equal(compose(h, hinv), PLHomeo::identity()));
        CHECK(pl_equal(compose(hinv, h), PLHomeo::identity()));
        CHECK(pl_equal(invert(hinv), h));
        for (int k = 0; k < 5; ++k) {
            const Rational t = oracle::random_rational(rng);
            CHECK(hinv(h(t)) == t);
        }
    }
    CHECK(pl_equal(invert(PLHomeo::identity()), PLHomeo::identity()));
}

TEST_CASE("orientation product matches sign multiplication") {
    CHECK(Orientation::Increasing * Orientation::Increasing == Orientation::Increasing);
    CHECK(Orientation::Increasing * Orientation::Decreasing == Orientation::Decreasing);
    CHECK(Orientation::Decreasing * Orientation::Increasing == Orientation::Decreasing);
    CHECK(Orientation::Decreasing * Orientation::Decreasing == Orientation::Increasing);
}
