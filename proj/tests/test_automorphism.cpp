#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "causal/automorphism.hpp"
#include "causal/gen.hpp"
#include "oracle.hpp"

using namespace causal;

namespace {

HElement boost() { return {PLHomeo::affine(2, 0), PLHomeo::affine(Rational(1, 2), 0)}; }
HElement reflection() { return {PLHomeo::affine(-1, 0), PLHomeo::affine(-1, 0)}; }
HElement translation() { return {PLHomeo::affine(1, 1), PLHomeo::affine(1, -1)}; }

} // namespace

TEST_CASE("pairs must share an orientation") {
    CHECK_THROWS_AS(HElement(PLHomeo::affine(2, 0), PLHomeo::affine(-1, 0)), InvariantViolation);
    CHECK_NOTHROW(HElement(PLHomeo::affine(2, 0), PLHomeo::affine(3, 1)));
    CHECK_NOTHROW(HElement(PLHomeo::affine(-2, 0), PLHomeo::affine(-3, 1)));
    CHECK(boost().orientation() == Orientation::Increasing);
    CHECK(reflection().orientation() == Orientation::Decreasing);
}

TEST_CASE("standard pairs require strictly shallower g on every piece") {
    CHECK_NOTHROW(validate_fg(PLHomeo::identity(), PLFunction::affine(Rational(1, 2), 0)));
    CHECK_NOTHROW(validate_fg(PLHomeo::affine(-1, 0), PLFunction::affine(Rational(1, 2), 3)));

    // Equal magnitudes violate strictness, starting at the left tail.
    try {
        validate_fg(PLHomeo::identity(), PLFunction::affine(1, 0));
        FAIL("expected SlopeViolation");
    } catch (const SlopeViolation& e) {
        CHECK(e.piece == 0);
        CHECK(e.f_slope == Rational(1));
        CHECK(e.g_slope == Rational(1));
    }

    // Violation confined to one interior piece of the merged partition.
    const PLHomeo f(PLFunction({{0, 0}, {1, 1}}, 2, 2));
    const PLFunction g({{0, 0}, {1, 2}}, 0, 0);
    try {
        validate_fg(f, g);
        FAIL("expected SlopeViolation");
    } catch (const SlopeViolation& e) {
        CHECK(e.piece == 1);
        CHECK(e.f_slope == Rational(1));
        CHECK(e.g_slope == Rational(2));
    }
}

TEST_CASE("from_fg builds phi = f+g and psi = f-g") {
    const FGPair p = validate_fg(PLHomeo::identity(), PLFunction::affine(Rational(1, 2), 0));
    const HElement a = from_fg(p);
    CHECK(pl_equal(a.phi(), PLHomeo::affine(Rational(3, 2), 0)));
    CHECK(pl_equal(a.psi(), PLHomeo::affine(Rational(1, 2), 0)));
}

TEST_CASE("to_fg splits into half sum and half difference") {
    const HElement a(PLHomeo::affine(-1, 0), PLHomeo::affine(-2, 0));
    const FGPair p = to_fg(a);
    CHECK(pl_equal(p.f(), PLHomeo::affine(Rational(-3, 2), 0)));
    CHECK(pl_equal(p.g(), PLFunction::affine(Rational(1, 2), 0)));
}

TEST_CASE("representation roundtrips are canonical identities") {
    gen::SplitMix64 rng(31);
    gen::GenParams params{32, 5, 9, gen::OrientationChoice::Either};
    for (int i = 0; i < 60; ++i) {
        const HElement a = gen::gen_helement(rng, params);
        CHECK(h_equal(from_fg(to_fg(a)), a));
        const FGPair p = gen::gen_fg(rng, params);
        CHECK(fg_equal(to_fg(from_fg(p)), p));
    }
}

TEST_CASE("apply on frozen examples") {
    CHECK(apply(identity_element(), {3, 4}) == Event{3, 4});
    CHECK(apply(boost(), {1, 0}) == Event{Rational(5, 4), Rational(3, 4)});
    CHECK(apply(reflection(), {1, 2}) == Event{-1, 2});
    CHECK(apply(translation(), {0, 0}) == Event{0, 1});
}

TEST_CASE("apply agrees with the rectangular formulas on random input") {
    gen::SplitMix64 rng(33);
    gen::GenParams params{34, 6, 9, gen::OrientationChoice::Either};
    for (int i = 0; i < 60; ++i) {
        const HElement a = gen::gen_helement(rng, params);
        for (int k = 0; k < 20; ++k) {
            const Event e = gen::gen_event(rng, 12);
            CHECK(apply(a, e) == apply_rect(a, e));
        }
    }
}

TEST_CASE("apply is a bijection with inverse star_inverse") {
    gen::SplitMix64 rng(35);
    gen::GenParams params{36, 5, 9, gen::OrientationChoice::Either};
    for (int i = 0; i < 40; ++i) {
        const HElement a = gen::gen_helement(rng, params);
        const HElement ainv = star_inverse(a);
        for (int k = 0; k < 10; ++k) {
            const Event e = gen::gen_event(rng, 12);
            CHECK(apply(ainv, apply(a, e)) == e);
            CHECK(apply(a, apply(ainv, e)) == e);
        }
    }
}

TEST_CASE("standard_form_apply matches the pair route on valid pairs") {
    gen::SplitMix64 rng(37);
    gen::GenParams params{38, 5, 9, gen::OrientationChoice::Either};
    for (int i = 0; i < 40; ++i) {
        const FGPair p = gen::gen_fg(rng, params);
        const HElement a = from_fg(p);
        for (int k = 0; k < 15; ++k) {
            const Event e = gen::gen_event(rng, 12);
            CHECK(standard_apply(p, e) == apply(a, e));
        }
    }
}

TEST_CASE("standard_form_apply at a hand-computed point") {
    // f = t, g = t/2 at (1,0): u = v = 1, image ((f(1)+f(1))/2 + 0, (g(1)+g(1))/2) = (1, 1/2).
    const Event img =
        standard_form_apply(PLHomeo::identity(), PLFunction::affine(Rational(1, 2), 0), {1, 0});
    CHECK(img == Event{1, Rational(1, 2)});
}

TEST_CASE("pi is 0 on increasing and 1 on decreasing pairs") {
    CHECK(pi(boost()) == Z2{0});
    CHECK(pi(reflection()) == Z2{1});
    CHECK(Z2{1} + Z2{1} == Z2{0});
    CHECK(Z2{1} + Z2{0} == Z2{1});
}

TEST_CASE("z2_act swaps components exactly when the index is 1") {
    const HElement a = boost();
    const HElement swapped = z2_act(Z2{1}, a);
    CHECK(pl_equal(swapped.phi(), a.psi()));
    CHECK(pl_equal(swapped.psi(), a.phi()));
    const HElement same = z2_act(Z2{0}, a);
    CHECK(h_equal(same, a));
}

TEST_CASE("star on frozen examples") {
    // reflection * boost twists: the decreasing left factor swaps boost first,
    // so phi picks up boost's psi component.
    const HElement rb = star(reflection(), boost());
    CHECK(pl_equal(rb.phi(), PLHomeo::affine(Rational(-1, 2), 0)));
    CHECK(pl_equal(rb.psi(), PLHomeo::affine(-2, 0)));

    const HElement a(PLHomeo::affine(2, 0), PLHomeo::affine(1, 0));
    const HElement b(PLHomeo::affine(1, 1), PLHomeo::affine(1, -1));
    const HElement ab = star(a, b);
    CHECK(pl_equal(ab.phi(), PLHomeo::affine(2, 2)));
    CHECK(pl_equal(ab.psi(), PLHomeo::affine(1, -1)));
}

TEST_CASE("star matches composition of the point maps") {
    gen::SplitMix64 rng(39);
    gen::GenParams params{40, 5, 9, gen::OrientationChoice::Either};
    for (int i = 0; i < 50; ++i) {
        const HElement a = gen::gen_helement(rng, params);
        const HElement b = gen::gen_helement(rng, params);
        const HElement ab = star(a, b);
        CHECK(pi(ab) == pi(a) + pi(b));
        for (int k = 0; k < 10; ++k) {
            const Event e = gen::gen_event(rng, 12);
            CHECK(apply(ab, e) == apply(a, apply(b, e)));
        }
    }
}

TEST_CASE("identity and inverse laws") {
    const HElement id = identity_element();
    CHECK(h_equal(star(id, boost()), boost()));
    CHECK(h_equal(star(boost(), id), boost()));
    CHECK(h_equal(star(id, reflection()), reflection()));
    CHECK(h_equal(star(reflection(), id), reflection()));

    // Frozen inverses.
    const HElement a(PLHomeo::affine(2, 0), PLHomeo::affine(1, 1));
    const HElement ainv = star_inverse(a);
    CHECK(pl_equal(ainv.phi(), PLHomeo::affine(Rational(1, 2), 0)));
    CHECK(pl_equal(ainv.psi(), PLHomeo::affine(1, -1)));

    const HElement d(PLHomeo::affine(-1, 0), PLHomeo::affine(-2, 0));
    const HElement dinv = star_inverse(d);
    CHECK(pl_equal(dinv.phi(), PLHomeo::affine(Rational(-1, 2), 0)));
    CHECK(pl_equal(dinv.psi(), PLHomeo::affine(-1, 0)));

    gen::SplitMix64 rng(41);
    gen::GenParams params{42, 5, 9, gen::OrientationChoice::Either};
    for (int i = 0; i < 40; ++i) {
        const HElement x = gen::gen_helement(rng, params);
        const HElement xinv = star_inverse(x);
        CHECK(pi(xinv) == pi(x));
        CHECK(h_equal(star(x, xinv), id));
        CHECK(h_equal(star(xinv, x), id));
    }
}

TEST_CASE("associativity on sampled triples") {
    gen::SplitMix64 rng(43);
    gen::GenParams params{44, 4, 7, gen::OrientationChoice::Either};
    for (int i = 0; i < 40; ++i) {
        const HElement a = gen::gen_helement(rng, params);
        const HElement b = gen::gen_helement(rng, params);
        const HElement c = gen::gen_helement(rng, params);
        CHECK(h_equal(star(a, star(b, c)), star(star(a, b), c)));
    }
}

TEST_CASE("omega embeds composition, decreasing factors included") {
    const PLHomeo f = PLHomeo::affine(-1, 0);
    const PLHomeo g = PLHomeo::affine(2, 0);
    const HElement lhs = omega(compose(f, g));
    CHECK(pl_equal(lhs.phi(), PLHomeo::affine(-2, 0)));
    CHECK(pl_equal(lhs.psi(), PLHomeo::affine(-2, 0)));
    CHECK(h_equal(lhs, star(omega(f), omega(g))));

    gen::SplitMix64 rng(45);
    gen::GenParams params{46, 5, 9, gen::OrientationChoice::Either};
    for (int i = 0; i < 60; ++i) {
        const PLHomeo u = gen::gen_homeo(rng, params);
        const PLHomeo v = gen::gen_homeo(rng, params);
        CHECK(h_equal(omega(compose(u, v)), star(omega(u), omega(v))));
    }
}

TEST_CASE("canonicalize acts componentwise") {
    const HElement a(PLHomeo(PLFunction({{0, 0}, {1, 1}, {2, 2}}, 1, 1)),
                     PLHomeo(PLFunction({{5, 10}}, 2, 2)));
    const HElement c = canonicalize(a);
    CHECK(c.phi().fn().size() == 1);
    CHECK(c.phi().fn().breakpoints().front().t == Rational(0));
    CHECK(c.psi().fn().breakpoints().front() == Breakpoint{0, 0});
    CHECK(h_equal(c, a));
}
