#pragma once

#include <stdexcept>
#include <string>

namespace sternkit {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain (v2(0), s(-1), ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Index or parameter outside an accepted range.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Brute-force enumeration refused because the input exceeds the guard.
class InputTooLarge : public Error {
public:
    using Error::Error;
};

/// Exact division impossible in the chosen coefficient ring.
class DivisionError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Two independent computations of the same object disagreed.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

class LookupError : public Error {
public:
    using Error::Error;
};

class FormatError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace sternkit
