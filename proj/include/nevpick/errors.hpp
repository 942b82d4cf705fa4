#ifndef NEVPICK_ERRORS_HPP
#define NEVPICK_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace nevpick {

// Base of every error raised by the library. The CLI maps InputError to exit
// code 2 and ValidationError to exit code 3.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InputError : public Error {
public:
    using Error::Error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class InvariantViolation : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    using Error::Error;
};

class InvalidData : public InputError {
public:
    using InputError::InputError;
};

// Raised by rational evaluation at a root of the denominator.
class PoleError : public Error {
public:
    explicit PoleError(std::complex<double> where)
        : Error("pole at z = " + std::to_string(where.real()) +
                (where.imag() != 0.0 ? " + " + std::to_string(where.imag()) + "i" : std::string{})),
          location_(where) {}

    std::complex<double> location() const noexcept { return location_; }

private:
    std::complex<double> location_;
};

class SingularPick : public Error {
public:
    SingularPick() : Error("Pick matrix is singular; use the degenerate solver") {}
};

class SplitNotAdmissible : public Error {
public:
    using Error::Error;
};

class DegenerateTransform : public Error {
public:
    DegenerateTransform() : Error("linear fractional transform is identically infinite") {}
};

class InvalidParameter : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class InvalidFunction : public Error {
public:
    using Error::Error;
};

class InconsistentClassification : public Error {
public:
    using Error::Error;
};

class NoSolutionRepresentation : public Error {
public:
    using Error::Error;
};

}  // namespace nevpick

#endif  // NEVPICK_ERRORS_HPP
