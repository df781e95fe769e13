#pragma once

#include <stdexcept>
#include <string>

namespace jbt {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Two operands belong to different factors.
class FactorMismatchError : public Error {
public:
    explicit FactorMismatchError(const std::string& what) : Error(what) {}
};

/// An argument violates a documented precondition (dimension, norm bound, parity, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// The Bergmann operator B(x,y) is numerically singular, so x^y does not exist.
class NotQuasiInvertibleError : public Error {
public:
    NotQuasiInvertibleError(const std::string& what, double condition)
        : Error(what), condition(condition) {}
    double condition;
};

/// A numerically certified property failed (spurious eigenvalue, residual blow-up, ...).
class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& what) : Error(what) {}
};

/// Iterative odd-power limit did not settle within the iteration cap.
class SlowConvergenceError : public Error {
public:
    explicit SlowConvergenceError(const std::string& what) : Error(what) {}
};

/// The factor has no unitary tripotent, so the requested sample set is empty.
class EmptyGamma1Error : public Error {
public:
    explicit EmptyGamma1Error(const std::string& what) : Error(what) {}
};

} // namespace jbt
