#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polysym {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands disagree on ambient dimension, length or shape.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its domain (non-symmetric input, t outside [0,1], ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    // position is 1-based
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Floating-point elimination hit an unusable pivot.
class NumericalBreakdown : public Error {
public:
    using Error::Error;
};

} // namespace polysym
