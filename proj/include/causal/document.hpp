#ifndef CAUSAL_DOCUMENT_HPP
#define CAUSAL_DOCUMENT_HPP

#include <string>

#include "causal/automorphism.hpp"
#include "causal/pl.hpp"

namespace causal::doc {

// Document grammar, JSON carrier. A function record is
//   {"breakpoints": [[t, value], ...], "left_slope": s, "right_slope": s}
// with every number written as a decimal-integer or "p/q" string. Integer
// JSON tokens are accepted on input; floating-point tokens are rejected.
// An automorphism document holds two records under "phi" and "psi"; a
// standard-form document holds them under "f" and "g". Orientation is never
// stored, it is derived from the slopes on load.
//
// Serialization is canonical: two-space indent, keys in lexicographic
// order, trailing newline. parse(serialize(x)) reproduces x exactly.

std::string serialize(const PLFunction& p);
std::string serialize(const HElement& a);
std::string serialize(const FGPair& p);

// Parse failures throw ParseError: malformed JSON carries 1-based
// line/column, structural and number errors carry a document path in
// `where`. Values that parse but break a type invariant surface as the
// type's own InvariantViolation.
PLFunction parse_function(const std::string& text);
PLHomeo parse_homeo(const std::string& text);
HElement parse_helement(const std::string& text);
FGPair parse_fg(const std::string& text);

// Shortest decimal with at most `significant` significant digits, rounded
// half away from zero. Presentation only; every other surface stays exact.
std::string to_decimal(const Rational& r, int significant = 12);

} // namespace causal::doc

#endif
