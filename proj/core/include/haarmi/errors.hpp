#pragma once

#include <stdexcept>
#include <string>

namespace haarmi {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidDimensionError : public Error {
public:
    using Error::Error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class NonConvergenceError : public Error {
public:
    using Error::Error;
};

/// Raised when a formula that needs d_A d_B <= d_E is asked for outside that regime.
class RegimeError : public Error {
public:
    using Error::Error;
};

class DegeneratePoleError : public Error {
public:
    using Error::Error;
};

class ResourceError : public Error {
public:
    using Error::Error;
};

/// A density matrix failed its positivity check beyond round-off.
class NumericalValidityError : public Error {
public:
    using Error::Error;
};

/// A parallel run lost a worker; carries how many samples finished.
class PartialResultError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

class UsageError : public Error {
public:
    using Error::Error;
};

}  // namespace haarmi
