#pragma once

#include <stdexcept>
#include <string>

namespace exactform {

// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Numeric evaluation left the real domain: ln of a nonpositive value,
// division by zero, a fractional power of a negative base, or an
// evaluation that overflowed to a non-finite value.
class DomainError : public Error {
public:
    using Error::Error;
};

class UnboundVariableError : public Error {
public:
    explicit UnboundVariableError(const std::string& name)
        : Error("unbound variable: " + name), name_(name) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

// Rejection sampling failed to collect enough domain-valid points.
class InsufficientSamplesError : public Error {
public:
    using Error::Error;
};

// Adaptive quadrature could not reach the requested error tolerance.
class QuadratureError : public Error {
public:
    using Error::Error;
};

} // namespace exactform
