#include "causal/automorphism.hpp"

#include <algorithm>
#include <sstream>

namespace causal {

HElement::HElement(PLHomeo phi, PLHomeo psi) : phi_(std::move(phi)), psi_(std::move(psi)) {
    if (phi_.orientation() != psi_.orientation())
        throw InvariantViolation("HElement: phi and psi must share an orientation");
}

namespace {

std::string violation_message(std::size_t piece, const Rational& fs, const Rational& gs) {
    std::ostringstream os;
    os << "FGPair: |g'| >= |f'| on piece " << piece << " (f' = " << fs << ", g' = " << gs << ")";
    return os.str();
}

} // namespace

SlopeViolation::SlopeViolation(std::size_t piece, Rational f_slope, Rational g_slope)
    : InvariantViolation(violation_message(piece, f_slope, g_slope)),
      piece(piece), f_slope(std::move(f_slope)), g_slope(std::move(g_slope)) {}

FGPair::FGPair(PLHomeo f, PLFunction g) : f_(std::move(f)), g_(std::move(g)) {
    std::vector<Rational> ts = f_.fn().abscissae();
    const std::vector<Rational> gs = g_.abscissae();
    ts.insert(ts.end(), gs.begin(), gs.end());
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

    // Piece k of the merged partition: left tail for k = 0, right tail for
    // k = ts.size(), else the segment [ts[k-1], ts[k]].
    const auto slope_on = [&ts](const PLFunction& fn, std::size_t k) -> Rational {
        if (k == 0) return fn.left_slope();
        if (k == ts.size()) return fn.right_slope();
        return (fn(ts[k]) - fn(ts[k - 1])) / (ts[k] - ts[k - 1]);
    };
    for (std::size_t k = 0; k <= ts.size(); ++k) {
        const Rational fs = slope_on(f_.fn(), k);
        const Rational gs_k = slope_on(g_, k);
        if (!(gs_k.abs() < fs.abs())) throw SlopeViolation(k, fs, gs_k);
    }
}

FGPair validate_fg(PLHomeo f, PLFunction g) { return FGPair(std::move(f), std::move(g)); }

HElement from_fg(const FGPair& p) {
    return HElement(PLHomeo(lincomb(1, p.f().fn(), 1, p.g())),
                    PLHomeo(lincomb(1, p.f().fn(), -1, p.g())));
}

FGPair to_fg(const HElement& a) {
    const Rational half(1, 2);
    return FGPair(PLHomeo(lincomb(half, a.phi().fn(), half, a.psi().fn())),
                  lincomb(half, a.phi().fn(), -half, a.psi().fn()));
}

Event apply(const HElement& a, const Event& p) {
    const NullCoords n = to_null(p);
    if (a.orientation() == Orientation::Increasing)
        return from_null({a.phi()(n.u), a.psi()(n.v)});
    return from_null({a.phi()(n.v), a.psi()(n.u)});
}

Event apply_rect(const HElement& a, const Event& p) {
    const Rational half(1, 2);
    if (a.orientation() == Orientation::Increasing) {
        const Rational pu = a.phi()(p.x + p.y);
        const Rational sv = a.psi()(p.x - p.y);
        return {(pu + sv) * half, (pu - sv) * half};
    }
    const Rational pv = a.phi()(p.x - p.y);
    const Rational su = a.psi()(p.x + p.y);
    return {(pv + su) * half, (pv - su) * half};
}

Event standard_form_apply(const PLHomeo& f, const PLFunction& g, const Event& e) {
    const Rational half(1, 2);
    const Rational u = e.x + e.y;
    const Rational v = e.x - e.y;
    const Rational fu = f(u), fv = f(v);
    const Rational gu = g(u), gv = g(v);
    if (f.orientation() == Orientation::Increasing)
        return {(fv + fu) * half + (gu - gv) * half, (fu - fv) * half + (gv + gu) * half};
    return {(fu + fv) * half + (gv - gu) * half, (fv - fu) * half + (gu + gv) * half};
}

HElement z2_act(Z2 a, const HElement& pair) {
    if (a.value == 0) return pair;
    return HElement(pair.psi(), pair.phi());
}

HElement star(const HElement& a, const HElement& b) {
    const HElement acted = z2_act(pi(a), b);
    return HElement(compose(a.phi(), acted.phi()), compose(a.psi(), acted.psi()));
}

HElement identity_element() { return HElement(PLHomeo::identity(), PLHomeo::identity()); }

HElement star_inverse(const HElement& a) {
    return z2_act(pi(a), HElement(invert(a.phi()), invert(a.psi())));
}

HElement canonicalize(const HElement& a) {
    return HElement(canonicalize(a.phi()), canonicalize(a.psi()));
}

std::ostream& operator<<(std::ostream& os, const HElement& a) {
    return os << "{phi=" << a.phi() << ", psi=" << a.psi() << "}";
}

} // namespace causal
