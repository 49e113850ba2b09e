#pragma once

#include <stdexcept>
#include <string>

namespace liecomp {

// Base of every error thrown by the library. The CLI maps these to exit
// codes: input problems (ParseError, EncodingError) exit 2, everything else
// that escapes a command is a failed mathematical precondition.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
public:
    FieldMismatch() : Error("operands belong to different number fields") {}
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class DegreeTooLarge : public Error {
public:
    DegreeTooLarge(std::size_t degree, std::size_t cap)
        : Error("polynomial degree " + std::to_string(degree) +
                " exceeds the supported maximum " + std::to_string(cap)) {}
};

class NotIrreducible : public Error {
public:
    using Error::Error;
};

class AmbientMismatch : public Error {
public:
    AmbientMismatch() : Error("subspaces live in different ambient spaces") {}
};

class NotAnIdeal : public Error {
public:
    using Error::Error;
};

class NotEntangled : public Error {
public:
    using Error::Error;
};

class NotAnAutomorphism : public Error {
public:
    using Error::Error;
};

class InternalInvariantViolation : public Error {
public:
    using Error::Error;
};

class LemmaViolation : public Error {
public:
    using Error::Error;
};

class EncodingError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace liecomp
