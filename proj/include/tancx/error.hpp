#pragma once

#include <stdexcept>
#include <string>

namespace tancx {

// Every error raised by the core derives from Error so the C API can map it
// onto a status code without string matching.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class OutOfRange : public Error {
public:
    using Error::Error;
};

/// Matrix shapes that disagree with the declared dimensions.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Malformed input document; the message carries the offending field path.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A linear system with more than one solution.
class UnderdeterminedSystem : public Error {
public:
    using Error::Error;
};

/// Differentials that do not square to zero.
class InvalidComplex : public Error {
public:
    using Error::Error;
};

class IncompatibleFamily : public Error {
public:
    using Error::Error;
};

/// Raised when a postcondition that theory guarantees turns out false.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace tancx
