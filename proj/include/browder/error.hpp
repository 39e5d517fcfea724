#pragma once

#include <stdexcept>
#include <string>

namespace browder {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A symbol that is identically zero was given where a nonzero one is required.
class ZeroSymbol : public Error {
public:
    using Error::Error;
};

/// The symbol vanishes somewhere on the unit circle.
class CircleZero : public Error {
public:
    using Error::Error;
};

/// Ball arithmetic could not certify a decision at the largest allowed precision.
class PrecisionExhausted : public Error {
public:
    using Error::Error;
};

class PreconditionFailed : public Error {
public:
    using Error::Error;
};

/// An internal dimension identity failed. Always a bug.
class DimensionCheckFailed : public Error {
public:
    using Error::Error;
};

class ClosedRangeUnknown : public Error {
public:
    using Error::Error;
};

class NotLeftSemiBrowder : public PreconditionFailed {
public:
    using PreconditionFailed::PreconditionFailed;
};

class NotRightSemiBrowder : public PreconditionFailed {
public:
    using PreconditionFailed::PreconditionFailed;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, int line = 0, int column = 0)
        : Error(what), line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace browder
