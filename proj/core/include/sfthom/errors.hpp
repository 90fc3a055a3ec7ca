#ifndef SFTHOM_ERRORS_HPP
#define SFTHOM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sfthom {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or inconsistent input data (bad JSON, dangling names, ...).
struct InputError : Error {
    explicit InputError(const std::string& msg) : Error(msg) {}
};

// A configured cap was exhausted (recoding level, grid bounds, period search).
struct CapError : Error {
    explicit CapError(const std::string& msg) : Error(msg) {}
};

// A theorem hypothesis failed where an operation requires it to hold.
struct HypothesisError : Error {
    explicit HypothesisError(const std::string& msg) : Error(msg) {}
};

// A decision criterion does not apply to the given input (e.g. wandering
// source for the resolving => bijective criterion).
struct CriterionError : Error {
    explicit CriterionError(const std::string& msg) : Error(msg) {}
};

// Internal consistency check failed; indicates a bug or unsound reduction.
struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

}  // namespace sfthom

#endif
