#include "causal/pl.hpp"

#include <algorithm>

#include "causal/errors.hpp"

namespace causal {

PLFunction::PLFunction(std::vector<Breakpoint> breakpoints, Rational left_slope,
                       Rational right_slope)
    : bps_(std::move(breakpoints)), left_(std::move(left_slope)), right_(std::move(right_slope)) {
    if (bps_.empty()) throw InvariantViolation("PLFunction: needs at least one breakpoint");
    for (std::size_t i = 1; i < bps_.size(); ++i)
        if (!(bps_[i - 1].t < bps_[i].t))
            throw InvariantViolation("PLFunction: breakpoint abscissae must be strictly increasing");
}

PLFunction PLFunction::affine(const Rational& slope, const Rational& intercept) {
    return PLFunction({{0, intercept}}, slope, slope);
}

Rational PLFunction::operator()(const Rational& t) const {
    if (t <= bps_.front().t) return bps_.front().value + left_ * (t - bps_.front().t);
    if (t >= bps_.back().t) return bps_.back().value + right_ * (t - bps_.back().t);
    // First breakpoint with abscissa > t; its predecessor starts the segment.
    auto it = std::upper_bound(bps_.begin(), bps_.end(), t,
                               [](const Rational& v, const Breakpoint& b) { return v < b.t; });
    const Breakpoint& hi = *it;
    const Breakpoint& lo = *std::prev(it);
    return lo.value + (hi.value - lo.value) * (t - lo.t) / (hi.t - lo.t);
}

Rational PLFunction::piece_slope(std::size_t k) const {
    if (k == 0) return left_;
    if (k == bps_.size()) return right_;
    const Breakpoint& lo = bps_[k - 1];
    const Breakpoint& hi = bps_[k];
    return (hi.value - lo.value) / (hi.t - lo.t);
}

std::vector<Rational> PLFunction::abscissae() const {
    std::vector<Rational> ts;
    ts.reserve(bps_.size());
    for (const Breakpoint& b : bps_) ts.push_back(b.t);
    return ts;
}

PLHomeo::PLHomeo(PLFunction fn) : fn_(std::move(fn)), orient_(Orientation::Increasing) {
    const int sign = fn_.left_slope().sign();
    if (sign == 0) throw InvariantViolation("PLHomeo: zero slope");
    for (std::size_t k = 0; k <= fn_.size(); ++k)
        if (fn_.piece_slope(k).sign() != sign)
            throw InvariantViolation("PLHomeo: piece slopes must be nonzero and share one sign");
    orient_ = sign > 0 ? Orientation::Increasing : Orientation::Decreasing;
}

PLHomeo PLHomeo::affine(const Rational& slope, const Rational& intercept) {
    return PLHomeo(PLFunction::affine(slope, intercept));
}

Rational PLHomeo::inverse_at(const Rational& s) const {
    const auto& bps = fn_.breakpoints();
    const bool inc = orient_ == Orientation::Increasing;
    const Rational& lo_v = inc ? bps.front().value : bps.back().value;
    const Rational& hi_v = inc ? bps.back().value : bps.front().value;
    if (s <= lo_v) {
        const Breakpoint& b = inc ? bps.front() : bps.back();
        const Rational& slope = inc ? fn_.left_slope() : fn_.right_slope();
        return b.t + (s - b.value) / slope;
    }
    if (s >= hi_v) {
        const Breakpoint& b = inc ? bps.back() : bps.front();
        const Rational& slope = inc ? fn_.right_slope() : fn_.left_slope();
        return b.t + (s - b.value) / slope;
    }
    // s is strictly between the extreme breakpoint values: find the segment
    // whose value interval contains it.
    std::size_t lo = 0, hi = bps.size() - 1;
    while (hi - lo > 1) {
        const std::size_t mid = lo + (hi - lo) / 2;
        const bool left_of_mid = inc ? s < bps[mid].value : s > bps[mid].value;
        if (left_of_mid) hi = mid; else lo = mid;
    }
    const Breakpoint& a = bps[lo];
    const Breakpoint& b = bps[hi];
    return a.t + (s - a.value) * (b.t - a.t) / (b.value - a.value);
}

PLFunction lincomb(const Rational& a, const PLFunction& p, const Rational& b, const PLFunction& q) {
    std::vector<Rational> ts = p.abscissae();
    const std::vector<Rational> qs = q.abscissae();
    ts.insert(ts.end(), qs.begin(), qs.end());
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

    std::vector<Breakpoint> bps;
    bps.reserve(ts.size());
    for (const Rational& t : ts) bps.push_back({t, a * p(t) + b * q(t)});
    return PLFunction(std::move(bps), a * p.left_slope() + b * q.left_slope(),
                      a * p.right_slope() + b * q.right_slope());
}

PLFunction canonicalize(const PLFunction& p) {
    const auto& bps = p.breakpoints();
    std::vector<Breakpoint> kept;
    for (std::size_t i = 0; i < bps.size(); ++i)
        if (p.piece_slope(i) != p.piece_slope(i + 1)) kept.push_back(bps[i]);
    if (kept.empty()) {
        // Globally affine: anchor at t = 0.
        return PLFunction({{0, p(0)}}, p.left_slope(), p.right_slope());
    }
    return PLFunction(std::move(kept), p.left_slope(), p.right_slope());
}

PLHomeo canonicalize(const PLHomeo& h) { return PLHomeo(canonicalize(h.fn())); }

bool pl_equal(const PLFunction& p, const PLFunction& q) {
    return canonicalize(p) == canonicalize(q);
}

bool pl_equal(const PLHomeo& p, const PLHomeo& q) { return pl_equal(p.fn(), q.fn()); }

PLHomeo compose(const PLHomeo& outer, const PLHomeo& inner) {
    std::vector<Rational> ts = inner.fn().abscissae();
    for (const Rational& s : outer.fn().abscissae()) ts.push_back(inner.inverse_at(s));
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

    std::vector<Breakpoint> bps;
    bps.reserve(ts.size());
    for (const Rational& t : ts) bps.push_back({t, outer(inner(t))});

    // Which outer tail continues each composite tail depends on where inner
    // sends -inf / +inf.
    const bool inner_inc = inner.orientation() == Orientation::Increasing;
    const Rational left = inner.fn().left_slope() *
                          (inner_inc ? outer.fn().left_slope() : outer.fn().right_slope());
    const Rational right = inner.fn().right_slope() *
                           (inner_inc ? outer.fn().right_slope() : outer.fn().left_slope());
    return PLHomeo(PLFunction(std::move(bps), left, right));
}

PLHomeo invert(const PLHomeo& h) {
    const auto& bps = h.fn().breakpoints();
    std::vector<Breakpoint> swapped;
    swapped.reserve(bps.size());
    for (const Breakpoint& b : bps) swapped.push_back({b.value, b.t});
    if (h.orientation() == Orientation::Decreasing)
        std::reverse(swapped.begin(), swapped.end());

    const bool inc = h.orientation() == Orientation::Increasing;
    const Rational left = (inc ? h.fn().left_slope() : h.fn().right_slope()).reciprocal();
    const Rational right = (inc ? h.fn().right_slope() : h.fn().left_slope()).reciprocal();
    return PLHomeo(PLFunction(std::move(swapped), left, right));
}

std::ostream& operator<<(std::ostream& os, const PLFunction& p) {
    os << "PL[" << p.left_slope() << " <- ";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) os << " ";
        os << "(" << p.breakpoints()[i].t << "," << p.breakpoints()[i].value << ")";
    }
    return os << " -> " << p.right_slope() << "]";
}

} // namespace causal
