#pragma once

#include <stdexcept>
#include <string>

namespace laz {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the operation's domain (K < 2, K1 < K, zone too wide, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Modulus with an even prime factor handed to a construction path.
class UnsupportedModulus : public Error {
public:
    using Error::Error;
};

class NotAUnit : public Error {
public:
    using Error::Error;
};

/// No element of the requested order exists (N does not divide the group exponent).
class NoSuchOrder : public Error {
public:
    using Error::Error;
};

/// Caller-supplied data failed a structural check.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Bound parameters outside the regime where the bound is defined (negative radicand).
class UndefinedBound : public Error {
public:
    using Error::Error;
};

/// Malformed serialized input.
class FormatError : public Error {
public:
    using Error::Error;
};

} // namespace laz
