#ifndef CLUSKEIN_ERRORS_HPP
#define CLUSKEIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cluskein {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// laurent ------------------------------------------------------------

struct TableMismatch : Error {
    using Error::Error;
};

struct UnknownVariable : Error {
    using Error::Error;
};

// A negative exponent landed on a variable outside the table's
// invertible subset.
struct NonInvertible : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

// A non-unit image was substituted into a negative exponent without a
// declared inverse.
struct SubstitutionError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what), pos(position) {}
    std::size_t pos;
};

// surface ------------------------------------------------------------

struct InvalidSurface : Error {
    using Error::Error;
};

struct NotFlippable : Error {
    using Error::Error;
};

struct FrozenEdge : Error {
    using Error::Error;
};

// skein / cluster ----------------------------------------------------

// The local configuration around an arc or puncture is not one of the
// recognized cases (plain quadrilateral, once-punctured digon).
struct UnsupportedConfiguration : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

}  // namespace cluskein

#endif
