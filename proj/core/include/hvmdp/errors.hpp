#pragma once

#include <stdexcept>
#include <string>

namespace hvmdp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The instance violates a structural invariant (negative rate, bad index, ...).
class ModelError : public Error {
public:
    using Error::Error;
};

/// Malformed instance text. Carries the position of the offending token.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A policy enumeration would exceed the configured cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// A transformation was asked for an inadmissible discount factor, or the
/// supplied certificate produced a negative transition probability.
class TransformError : public Error {
public:
    using Error::Error;
};

/// A value vector or solution is inconsistent with the model it is paired with.
class SolutionError : public Error {
public:
    using Error::Error;
};

} // namespace hvmdp
