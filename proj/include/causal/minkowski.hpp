#ifndef CAUSAL_MINKOWSKI_HPP
#define CAUSAL_MINKOWSKI_HPP

#include <ostream>

#include "causal/rational.hpp"

namespace causal {

// A point of the 1+1 dimensional Minkowski plane. x is space, y is time.
struct Event {
    Rational x;
    Rational y;

    bool operator==(const Event& o) const { return x == o.x && y == o.y; }
};

// Null (light-cone) coordinates u = x+y, v = x-y. Light rays are lines of
// constant u or constant v.
struct NullCoords {
    Rational u;
    Rational v;

    bool operator==(const NullCoords& o) const { return u == o.u && v == o.v; }
};

inline NullCoords to_null(const Event& p) { return {p.x + p.y, p.x - p.y}; }

inline Event from_null(const NullCoords& n) {
    const Rational half(1, 2);
    return {(n.u + n.v) * half, (n.u - n.v) * half};
}

// p precedes q causally when q lies in or on p's future light cone:
// dy >= |dx|, equivalently du >= 0 and dv <= 0.
inline bool causally_precedes(const Event& p, const Event& q) {
    const Rational dy = q.y - p.y;
    return dy >= (q.x - p.x).abs();
}

// Strict interior of the cone: dy > |dx|.
inline bool chronologically_precedes(const Event& p, const Event& q) {
    const Rational dy = q.y - p.y;
    return dy > (q.x - p.x).abs();
}

inline std::ostream& operator<<(std::ostream& os, const Event& p) {
    return os << "(" << p.x << ", " << p.y << ")";
}

inline std::ostream& operator<<(std::ostream& os, const NullCoords& n) {
    return os << "[u=" << n.u << ", v=" << n.v << "]";
}

} // namespace causal

#endif
