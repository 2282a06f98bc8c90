#ifndef HAHN_ERRORS_HPP
#define HAHN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hahn {

/// Base class for all engine errors.
struct engine_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Incompatible modes, bad derivation parameters, index outside an
/// embedding table, and similar setup problems.
struct config_error : engine_error {
    using engine_error::engine_error;
};

/// Input outside the mathematical domain of an operation
/// (exp of a non-infinitesimal, valuation of zero, ...).
struct domain_error : engine_error {
    using engine_error::engine_error;
};

/// Malformed CLI invocation or operation arguments.
struct usage_error : engine_error {
    using engine_error::engine_error;
};

/// A configurable work cap was exceeded.
struct resource_error : engine_error {
    using engine_error::engine_error;
};

/// Lexical or syntax error in expression text, with position info.
struct parse_error : engine_error {
    int line;
    int column;
    std::string expected;

    parse_error(const std::string& msg, int line_, int column_, std::string expected_ = {})
        : engine_error(msg), line(line_), column(column_), expected(std::move(expected_)) {}
};

} // namespace hahn

#endif
