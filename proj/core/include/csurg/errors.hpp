#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace csurg {

// Base class for every domain error raised by the library. The CLI maps
// these to exit code 1; malformed input (ParseError) maps to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

// Kirby moves.
class BlowDownFramingError : public Error {
public:
    using Error::Error;
};

class SlideIndexError : public Error {
public:
    using Error::Error;
};

class SlideSignError : public Error {
public:
    using Error::Error;
};

class MoveSequenceError : public Error {
public:
    MoveSequenceError(std::size_t step, const std::string& what)
        : Error("move " + std::to_string(step) + ": " + what), step_(step) {}
    std::size_t step() const { return step_; }

private:
    std::size_t step_;
};

// Contact surgery coefficients.
class PositiveCoefficientError : public Error {
public:
    using Error::Error;
};

class NegativeCoefficientError : public Error {
public:
    using Error::Error;
};

class ZeroCoefficientError : public Error {
public:
    using Error::Error;
};

class InconsistentChoiceError : public Error {
public:
    using Error::Error;
};

class NonTorsionClassError : public Error {
public:
    using Error::Error;
};

// Family parameters outside m <= 0, q >= 1 (or >= 0 where slope infinity is
// allowed), gcd(p, q) = 1.
class OutOfFamilyError : public Error {
public:
    using Error::Error;
};

}  // namespace csurg
