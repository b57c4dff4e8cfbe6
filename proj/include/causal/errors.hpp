#ifndef CAUSAL_ERRORS_HPP
#define CAUSAL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace causal {

// Malformed input text: bad number grammar, bad document structure.
// line/column are 1-based when known, 0 otherwise; where is a document
// path like "phi.breakpoints[2][1]" when the text itself was well formed.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg, std::size_t line = 0,
                        std::size_t column = 0, std::string where = {})
        : std::runtime_error(msg), line(line), column(column), where(std::move(where)) {}

    std::size_t line;
    std::size_t column;
    std::string where;
};

// A value that violates a type invariant: non-monotone breakpoints, zero
// slope in a homeomorphism, mixed-orientation pair.
struct InvariantViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A file that could not be read or written.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace causal

#endif
