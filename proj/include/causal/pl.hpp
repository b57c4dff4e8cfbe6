#ifndef CAUSAL_PL_HPP
#define CAUSAL_PL_HPP

#include <cstddef>
#include <ostream>
#include <vector>

#include "causal/rational.hpp"

namespace causal {

enum class Orientation { Increasing, Decreasing };

inline Orientation operator*(Orientation a, Orientation b) {
    return a == b ? Orientation::Increasing : Orientation::Decreasing;
}

inline std::ostream& operator<<(std::ostream& os, Orientation o) {
    return os << (o == Orientation::Increasing ? "increasing" : "decreasing");
}

struct Breakpoint {
    Rational t;
    Rational value;

    bool operator==(const Breakpoint& o) const { return t == o.t && value == o.value; }
};

// Continuous piecewise-linear map of the real line: affine between
// consecutive breakpoints, affine with left_slope on (-inf, t_0] and with
// right_slope on [t_last, +inf). At least one breakpoint; abscissae strictly
// increasing. Immutable value type.
class PLFunction {
public:
    PLFunction(std::vector<Breakpoint> breakpoints, Rational left_slope, Rational right_slope);

    static PLFunction affine(const Rational& slope, const Rational& intercept);
    static PLFunction constant(const Rational& value) { return affine(0, value); }

    const std::vector<Breakpoint>& breakpoints() const { return bps_; }
    const Rational& left_slope() const { return left_; }
    const Rational& right_slope() const { return right_; }
    std::size_t size() const { return bps_.size(); }

    // Exact value of the piecewise-affine extension at t.
    Rational operator()(const Rational& t) const;

    // Slope of piece k: k = 0 is the left tail, k = size() the right tail,
    // otherwise the segment between breakpoints k-1 and k.
    Rational piece_slope(std::size_t k) const;
    std::size_t piece_count() const { return bps_.size() + 1; }

    std::vector<Rational> abscissae() const;

    bool operator==(const PLFunction& o) const {
        return bps_ == o.bps_ && left_ == o.left_ && right_ == o.right_;
    }

private:
    std::vector<Breakpoint> bps_;
    Rational left_;
    Rational right_;
};

// Strictly monotone PLFunction: every piece slope (tails included) is
// nonzero and all share one sign. Bijective R -> R.
class PLHomeo {
public:
    explicit PLHomeo(PLFunction fn);

    static PLHomeo identity() { return affine(1, 0); }
    static PLHomeo affine(const Rational& slope, const Rational& intercept);

    const PLFunction& fn() const { return fn_; }
    Orientation orientation() const { return orient_; }

    Rational operator()(const Rational& t) const { return fn_(t); }

    // Exact preimage: the unique t with f(t) = s.
    Rational inverse_at(const Rational& s) const;

    bool operator==(const PLHomeo& o) const { return fn_ == o.fn_; }

private:
    PLFunction fn_;
    Orientation orient_;
};

// a*p + b*q on the merged breakpoint partition.
PLFunction lincomb(const Rational& a, const PLFunction& p, const Rational& b, const PLFunction& q);

// Drops every breakpoint whose adjacent piece slopes coincide. A globally
// affine function is anchored at the single breakpoint (0, p(0)) so that
// canonical forms of pointwise-equal functions are field-by-field identical.
PLFunction canonicalize(const PLFunction& p);
PLHomeo canonicalize(const PLHomeo& h);

// Pointwise equality on R, decided by comparing canonical forms.
bool pl_equal(const PLFunction& p, const PLFunction& q);
bool pl_equal(const PLHomeo& p, const PLHomeo& q);

// outer after inner. Result breakpoints: inner's, plus inner-preimages of
// outer's.
PLHomeo compose(const PLHomeo& outer, const PLHomeo& inner);

PLHomeo invert(const PLHomeo& h);

inline Orientation orientation(const PLHomeo& h) { return h.orientation(); }

std::ostream& operator<<(std::ostream& os, const PLFunction& p);
inline std::ostream& operator<<(std::ostream& os, const PLHomeo& h) { return os << h.fn(); }

} // namespace causal

#endif
