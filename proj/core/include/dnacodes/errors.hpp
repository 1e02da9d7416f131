#pragma once

#include <stdexcept>
#include <string>

namespace dnacodes {

// Parameters outside the pattern an operation is defined for, e.g. asking for
// the orbit construction when q does not divide n.  Invalid values of an
// otherwise supported parameter (odd alphabet size, out-of-range letters, ...)
// throw plain std::invalid_argument instead.
class unsupported_parameters : public std::invalid_argument {
public:
    explicit unsupported_parameters(const std::string& what)
        : std::invalid_argument(what) {}
};

// An exhaustive scan would exceed the configured state cap.  The message says
// how many states were requested and what the cap is, so callers can decide
// whether to raise it.
class enumeration_refused : public std::runtime_error {
public:
    explicit enumeration_refused(const std::string& what)
        : std::runtime_error(what) {}
};

// A numeric routine (fixed-point iteration, bisection) failed to converge or
// produced a residual above its acceptance threshold.
class numerical_failure : public std::runtime_error {
public:
    explicit numerical_failure(const std::string& what)
        : std::runtime_error(what) {}
};

}  // namespace dnacodes
