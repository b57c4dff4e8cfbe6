#ifndef CAUSAL_AUTOMORPHISM_HPP
#define CAUSAL_AUTOMORPHISM_HPP

#include <cstddef>
#include <ostream>

#include "causal/minkowski.hpp"
#include "causal/pl.hpp"

namespace causal {

// Parity group {0, 1} under addition mod 2.
struct Z2 {
    int value = 0;

    Z2 operator+(Z2 o) const { return {(value + o.value) & 1}; }
    bool operator==(const Z2&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, Z2 a) { return os << a.value; }

// One causal automorphism of the plane, represented by its pair of
// one-dimensional homeomorphisms. The components must share an orientation:
// both increasing (H+) or both decreasing (H-).
class HElement {
public:
    HElement(PLHomeo phi, PLHomeo psi);

    const PLHomeo& phi() const { return phi_; }
    const PLHomeo& psi() const { return psi_; }
    Orientation orientation() const { return phi_.orientation(); }

private:
    PLHomeo phi_;
    PLHomeo psi_;
};

// The standard-form representation: a monotone f and a companion g whose
// slope is strictly shallower than f's on every piece of their merged
// partition, tails included. For piecewise-linear carriers this per-piece
// inequality is equivalent to the chord condition over all intervals, and
// the strict inequality makes the tail slopes of f+g and f-g nonzero, which
// gives the required unboundedness of g+f and g-f on both ends.
class FGPair {
public:
    FGPair(PLHomeo f, PLFunction g); // throws SlopeViolation

    const PLHomeo& f() const { return f_; }
    const PLFunction& g() const { return g_; }

private:
    PLHomeo f_;
    PLFunction g_;
};

// Raised by FGPair validation; identifies the first piece of the merged
// partition where |g'| >= |f'|. Pieces are indexed left tail = 0, then the
// interior segments left to right, then the right tail.
struct SlopeViolation : InvariantViolation {
    SlopeViolation(std::size_t piece, Rational f_slope, Rational g_slope);

    std::size_t piece;
    Rational f_slope;
    Rational g_slope;
};

FGPair validate_fg(PLHomeo f, PLFunction g);

// phi = f+g, psi = f-g.
HElement from_fg(const FGPair& p);

// f = (phi+psi)/2, g = (phi-psi)/2. Always yields a valid pair.
FGPair to_fg(const HElement& a);

// The automorphism's point map, computed in null coordinates:
// (u,v) -> (phi(u), psi(v)) for increasing pairs, (phi(v), psi(u)) for
// decreasing ones.
Event apply(const HElement& a, const Event& p);

// Same map via the rectangular half-sum formulas; independent codepath kept
// for cross-validation against apply.
Event apply_rect(const HElement& a, const Event& p);

// Literal standard-form formula, branch chosen by the orientation of f.
// Does not require the pair to be valid; standard_apply wraps it for
// validated pairs.
Event standard_form_apply(const PLHomeo& f, const PLFunction& g, const Event& e);

inline Event standard_apply(const FGPair& p, const Event& e) {
    return standard_form_apply(p.f(), p.g(), e);
}

// 0 on increasing pairs, 1 on decreasing ones. A homomorphism onto Z2.
inline Z2 pi(const HElement& a) {
    return {a.orientation() == Orientation::Increasing ? 0 : 1};
}

// Component swap when a = 1.
HElement z2_act(Z2 a, const HElement& pair);

// The twisted group operation: compose componentwise after letting the
// parity of the left factor act on the right one.
HElement star(const HElement& a, const HElement& b);

HElement identity_element();

// pi(a) acting on the componentwise inverses; two-sided inverse under star.
HElement star_inverse(const HElement& a);

// Diagonal embedding of the line's homeomorphism group.
inline HElement omega(const PLHomeo& f) { return HElement(f, f); }

inline bool h_equal(const HElement& a, const HElement& b) {
    return pl_equal(a.phi(), b.phi()) && pl_equal(a.psi(), b.psi());
}

inline bool fg_equal(const FGPair& a, const FGPair& b) {
    return pl_equal(a.f(), b.f()) && pl_equal(a.g(), b.g());
}

HElement canonicalize(const HElement& a);

std::ostream& operator<<(std::ostream& os, const HElement& a);

} // namespace causal

#endif
