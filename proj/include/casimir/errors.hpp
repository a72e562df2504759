#ifndef CASIMIR_ERRORS_HPP
#define CASIMIR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace casimir {

/// Precondition or invariant violation on user-supplied values.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Any failure while reading a material database (I/O, grammar, record validation).
class MaterialDbError : public std::runtime_error {
public:
    explicit MaterialDbError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Grammar error in a material database, carries the 1-based source line.
class MaterialParseError : public MaterialDbError {
public:
    MaterialParseError(const std::string& origin, int line, const std::string& msg)
        : MaterialDbError(origin + ":" + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Adaptive quadrature or summation failed to reach the requested tolerance.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Requested evaluation lies outside the model's range of validity
/// (e.g. a parametric-growth exponent that would overflow).
class OutOfModelError : public std::domain_error {
public:
    explicit OutOfModelError(const std::string& msg) : std::domain_error(msg) {}
};

}  // namespace casimir

#endif
