#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on the mathematical input was violated
/// (non-prime-power order, divisor that does not divide x^n - 1, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Operands belong to different fields.
class FieldMismatch : public Error {
public:
    FieldMismatch() : Error("operands belong to different fields") {}
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

/// Malformed polynomial notation; `position` is the 0-based character offset.
class ParseError : public Error {
public:
    ParseError(std::string what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), message_(std::move(what)), position_(position) {}

    [[nodiscard]] std::size_t position() const noexcept { return position_; }
    /// The description without the position suffix.
    [[nodiscard]] const std::string& message() const noexcept { return message_; }

private:
    std::string message_;
    std::size_t position_;
};

/// An internal consistency check failed. Indicates a bug, not bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace qcq
