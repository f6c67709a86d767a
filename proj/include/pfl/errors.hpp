#pragma once

#include <stdexcept>
#include <string>

namespace pfl {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Lexical / structural problems in a group-definition file.  `line` is
// 1-based; 0 means "no specific line".
struct ParseError : Error {
    int line;
    ParseError(const std::string& msg, int line_)
        : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// A piece list that fails to be a homeomorphism of its domain.
struct ValidationError : Error {
    enum class Kind {
        Empty,
        Tiling,
        Discontinuity,
        NonMonotonic,
        PoleInPiece,
        EndpointNotFixed,
    };
    Kind kind;
    ValidationError(Kind k, const std::string& msg) : Error(msg), kind(k) {}
};

struct DomainMismatchError : Error {
    using Error::Error;
};

// A germ was requested at a point the element does not fix, or with an
// invalid side.
struct GermError : Error {
    using Error::Error;
};

// A bounded search ran out of nodes or length.  Explicitly not a claim of
// nonexistence.
struct BudgetExhaustedError : Error {
    using Error::Error;
};

// An operation needed a rational point where only a quadratic-irrational
// marker is available.
struct IrrationalPointError : Error {
    using Error::Error;
};

struct CatalogError : Error {
    using Error::Error;
};

struct PreconditionError : Error {
    using Error::Error;
};

} // namespace pfl
