#pragma once

#include <stdexcept>
#include <string>

namespace modinv {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InversionOfZero : Error {
    InversionOfZero() : Error("inversion of zero in prime field") {}
};

struct AmbientMismatch : Error {
    using Error::Error;
    AmbientMismatch() : Error("operands live in different ambient rings") {}
};

struct SingularMatrix : Error {
    using Error::Error;
    SingularMatrix() : Error("matrix is singular over F_p") {}
};

// Raised when a basis computation exceeds its configured caps.
struct ResourceLimit : Error {
    using Error::Error;
};

struct GroupTooLarge : Error {
    using Error::Error;
};

struct ModularAction : Error {
    ModularAction() : Error("Reynolds operator unavailable: p divides |G|") {}
};

struct NonModular : Error {
    NonModular() : Error("transfer ideal is the unit ideal: p does not divide |G|") {}
};

struct NotInSubalgebra : Error {
    using Error::Error;
};

struct UnitIdeal : Error {
    UnitIdeal() : Error("ideal is the unit ideal") {}
};

struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& what_)
        : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

struct ValidationError : Error {
    using Error::Error;
};

// Impossible internal state; indicates a bug, never bad input.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace modinv
