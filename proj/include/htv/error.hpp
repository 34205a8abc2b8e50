#ifndef HTV_ERROR_HPP
#define HTV_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace htv {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed polynomial text. `position` is the 0-based byte offset.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// Raised by `exact_divide` when the divisor does not divide the dividend.
class InexactDivision : public Error {
public:
    using Error::Error;
};

/// Elimination input that does not depend on the eliminated variable.
class DegenerateInput : public Error {
public:
    using Error::Error;
};

/// The derivation has no rule for a variable that occurs in its argument.
class UnsupportedVariable : public Error {
public:
    using Error::Error;
};

/// A numeric point where A4 or A5 (or w) vanishes.
class DegeneratePoint : public Error {
public:
    using Error::Error;
};

class SamplingFailure : public Error {
public:
    using Error::Error;
};

class ZeroPolynomial : public Error {
public:
    using Error::Error;
};

}  // namespace htv

#endif  // HTV_ERROR_HPP
