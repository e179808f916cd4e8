#pragma once

#include <stdexcept>
#include <string>

namespace slopecalc {

// Input that violates a schema or usage contract (malformed JSON,
// non-prime p, bad flag combinations). CLI exit code 2.
struct schema_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Structurally valid inputs that cannot be combined (level mismatch,
// dimension mismatch, indivisible multiplicities). CLI exit code 3.
struct semantic_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A valuation needed by a hull could not be determined at the working
// precision. Carries the precision a retry should use. CLI exit code 4.
struct precision_error : std::runtime_error {
    long suggested_precision;
    precision_error(const std::string& what, long suggested)
        : std::runtime_error(what), suggested_precision(suggested) {}
};

} // namespace slopecalc
