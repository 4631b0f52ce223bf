#ifndef GROEBNER_ERRORS_HPP
#define GROEBNER_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace groebner {

/// Base class for all library-specific failures.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exponent operation left the representable range of a 64-bit natural.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// A configurable resource limit (S-pair reduction budget) was exhausted.
class BudgetExceededError : public Error {
public:
    using Error::Error;
};

/// Text input could not be parsed; carries a 1-based position.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(message + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          message_(message),
          line_(line),
          column_(column) {}

    /// Message without the position suffix, for rethrowing at an adjusted
    /// position.
    const std::string& message() const { return message_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::string message_;
    std::size_t line_;
    std::size_t column_;
};

/// A certificate is structurally unusable (bad index, wrong pair coverage,
/// broken framing) as opposed to merely failing verification.
class MalformedCertificateError : public Error {
public:
    using Error::Error;
};

} // namespace groebner

#endif
