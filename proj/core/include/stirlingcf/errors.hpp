#ifndef STIRLINGCF_ERRORS_HPP
#define STIRLINGCF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace stirlingcf {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Mathematically invalid input (zero denominator, division by zero).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Caller violated a documented precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed; indicates a bug, not bad input.
class InternalInvariantError : public Error {
public:
    using Error::Error;
};

} // namespace stirlingcf

#endif
