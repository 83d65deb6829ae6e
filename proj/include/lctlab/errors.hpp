#ifndef LCTLAB_ERRORS_HPP
#define LCTLAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lctlab {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Bad user input: grammar violations, unknown variables, malformed rationals.
struct parse_error : error {
    parse_error(const std::string& what, std::size_t offset)
        : error(what + " (at byte " + std::to_string(offset) + ")"), offset(offset) {}
    std::size_t offset;
};

// Domain violations: ambient mismatches, non-monomial input to the Newton
// oracle, thresholds out of range, unit-ideal codimension, exceeded guards.
struct value_error : error {
    using error::error;
};

// A computation hit a configured resource budget. Never a wrong answer:
// the caller gets this instead of a result.
struct budget_error : error {
    budget_error(const std::string& what, long spairs_processed, long reductions)
        : error(what), spairs_processed(spairs_processed), reductions(reductions) {}
    long spairs_processed = 0;
    long reductions = 0;
};

}  // namespace lctlab

#endif
