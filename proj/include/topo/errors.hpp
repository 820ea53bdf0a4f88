/**
 * Error taxonomy shared by the library and the CLI.
 */

#ifndef TOPO_ERRORS_HPP
#define TOPO_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace topo {

/**
 * Base class for all structured library errors.
 *
 * Every error carries a stable machine-readable code; the CLI maps codes
 * onto exit statuses and JSON error objects.
 */
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

/// Rejected argument (k = 0 for discrete/polygon, bad lens modulus, ...).
class InvalidArgumentError : public Error {
public:
    explicit InvalidArgumentError(const std::string& message)
        : Error("InvalidArgument", message) {}
};

/// A constructor output failed eager validation (internal consistency bug).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& message)
        : Error("ValidationFailed", message) {}
};

/// Quotient of a non-free action; carries a witness fixed simplex.
class NotFreeError : public Error {
public:
    NotFreeError(std::size_t element, int dim, std::size_t simplex,
                 const std::string& message)
        : Error("NotFree", message),
          element_(element), dim_(dim), simplex_(simplex) {}

    std::size_t element() const { return element_; }
    int dim() const { return dim_; }
    std::size_t simplex() const { return simplex_; }

private:
    std::size_t element_;
    int dim_;
    std::size_t simplex_;
};

/// Lens parameter l_i with gcd(l_i, m) > 1; index is 1-based.
class NonPrimeParameterError : public Error {
public:
    NonPrimeParameterError(std::size_t index, long long gcd,
                           const std::string& message)
        : Error("NonPrimeParameter", message), index_(index), gcd_(gcd) {}

    std::size_t index() const { return index_; }
    long long gcd() const { return gcd_; }

private:
    std::size_t index_;
    long long gcd_;
};

/// Mapping-torus input map is not an automorphism of its source.
class NotAutomorphismError : public Error {
public:
    explicit NotAutomorphismError(const std::string& message)
        : Error("NotAutomorphism", message) {}
};

/// Expression parse failure with source position.
class SyntaxError : public Error {
public:
    SyntaxError(int line, int col, std::string expected,
                const std::string& message)
        : Error("SyntaxError", message),
          line_(line), col_(col), expected_(std::move(expected)) {}

    int line() const { return line_; }
    int col() const { return col_; }
    const std::string& expected() const { return expected_; }

private:
    int line_;
    int col_;
    std::string expected_;
};

/// A construction would exceed the global simplex budget.
class BudgetExceededError : public Error {
public:
    BudgetExceededError(std::size_t requested, std::size_t budget,
                        const std::string& message)
        : Error("BudgetExceeded", message),
          requested_(requested), budget_(budget) {}

    std::size_t requested() const { return requested_; }
    std::size_t budget() const { return budget_; }

private:
    std::size_t requested_;
    std::size_t budget_;
};

/// Violated operation precondition (e.g. stability degree out of range).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& message)
        : Error("PreconditionViolated", message) {}
};

/// File load/save failure.
class IoError : public Error {
public:
    explicit IoError(const std::string& message) : Error("IoError", message) {}
};

} // namespace topo

#endif // TOPO_ERRORS_HPP
