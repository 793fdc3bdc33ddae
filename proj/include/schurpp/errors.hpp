#pragma once

#include <stdexcept>
#include <string>

namespace schurpp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionTooLarge : public Error {
public:
    using Error::Error;
};

class UnassignedVariable : public Error {
public:
    using Error::Error;
};

class NonNilpotentArgument : public Error {
public:
    using Error::Error;
};

class BoxTooLarge : public Error {
public:
    using Error::Error;
};

/// A parameter violates a parity precondition (m must be even, n must be even).
class ParityViolation : public Error {
public:
    using Error::Error;
};

class OddN : public ParityViolation {
public:
    using ParityViolation::ParityViolation;
};

class OddM : public ParityViolation {
public:
    using ParityViolation::ParityViolation;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace schurpp
