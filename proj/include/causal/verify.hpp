#ifndef CAUSAL_VERIFY_HPP
#define CAUSAL_VERIFY_HPP

#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "causal/automorphism.hpp"
#include "causal/gen.hpp"
#include "causal/minkowski.hpp"

namespace causal::verify {

enum class Relation { Causal, Chronological };

inline std::ostream& operator<<(std::ostream& os, Relation r) {
    return os << (r == Relation::Causal ? "causal" : "chronological");
}

// n evenly spaced abscissae on [t_min, t_max] per axis; the grid is their
// n^2 rational lattice points.
struct GridSpec {
    Rational t_min = -10;
    Rational t_max = 10;
    int n = 21;

    std::vector<Rational> axis() const;
    // Lattice points, x index major: events()[i*n + j] = (axis()[i], axis()[j]).
    std::vector<Event> events() const;
};

template <class Witness>
struct CheckReport {
    bool passed = true;
    long long trials = 0;
    std::optional<Witness> first_counterexample;
    std::map<std::string, long long> coverage;
};

using PointMap = std::function<Event(const Event&)>;

struct ConeWitness {
    long long pair_index; // a*N + b over grid point indices, N = n^2
    Event p, q;
    Event fp, fq;
    Relation relation;
    bool expected;
    bool actual;
};

// For every ordered grid pair (p, q): p rel q iff map(p) rel map(q).
// Failures are data, not errors; the lowest pair index wins. trials counts
// pairs examined in serial order (index of the first failure plus one, or
// all N^2 when passing). The default kernel runs the pair sweep with OpenMP
// on scaled-integer coordinates; the _serial variant is the straightforward
// rational-comparison reference and must produce an identical report.
CheckReport<ConeWitness> check_cone_preservation(const PointMap& map, const GridSpec& grid,
                                                 Relation relation);
CheckReport<ConeWitness> check_cone_preservation_serial(const PointMap& map, const GridSpec& grid,
                                                        Relation relation);

inline CheckReport<ConeWitness> check_causal_preservation(const PointMap& map,
                                                          const GridSpec& grid) {
    return check_cone_preservation(map, grid, Relation::Causal);
}

inline CheckReport<ConeWitness> check_chronological_preservation(const PointMap& map,
                                                                 const GridSpec& grid) {
    return check_cone_preservation(map, grid, Relation::Chronological);
}

struct GroupLawWitness {
    long long trial;
    std::string law;
    HElement a, b, c;
};

// Associativity, identity, and two-sided inverse on sampled triples, exact
// canonical-form equality. With OrientationChoice::Either the orientation
// pattern of trial i is forced to the bits of i mod 8, so eight patterns are
// covered evenly; coverage keys are "pattern:abc".
CheckReport<GroupLawWitness> check_group_axioms(const gen::GenParams& params, long long trials);

struct PiCaseWitness {
    int pi_a, pi_b;
    long long trial;
    Event event;
    Event via_star;
    Event via_composition;
};

// For each of the four (pi(A), pi(B)) cases: the point map of star(A, B)
// equals apply(A, apply(B, .)) at random events, exactly.
CheckReport<PiCaseWitness> check_pi_homomorphism_cases(const gen::GenParams& params,
                                                       long long trials_per_case,
                                                       int events_per_trial = 200);

struct EquivalenceWitness {
    Event event;
    Event standard_image;
    Event pair_image;
};

// standard_apply(p, e) == apply(from_fg(p), e) on every grid event.
CheckReport<EquivalenceWitness> check_theorem_equivalence(const FGPair& p, const GridSpec& grid);

// The fixed witness showing componentwise composition is not the group
// operation: A = (-t, -t), B = (2t, t) at event (1, 0). Construction checks
// that the star image matches direct composition and differs from the
// componentwise image.
struct NaiveCounterexample {
    HElement a, b;
    Event witness;
    Event star_image;
    Event componentwise_image;
};

NaiveCounterexample naive_counterexample();

template <class W>
std::ostream& print_report(std::ostream& os, const CheckReport<W>& report, const std::string& name) {
    os << (report.passed ? "pass" : "FAIL") << "  " << name << "  trials=" << report.trials;
    for (const auto& [key, count] : report.coverage) os << "  " << key << "=" << count;
    return os;
}

} // namespace causal::verify

#endif
