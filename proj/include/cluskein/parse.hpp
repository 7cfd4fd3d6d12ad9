#ifndef CLUSKEIN_PARSE_HPP
#define CLUSKEIN_PARSE_HPP

#include <string_view>

#include "cluskein/laurent.hpp"

namespace cluskein {

// Parses the canonical display grammar back into a polynomial:
// integers, variable names, + - * ^, parentheses, negative integer
// exponents.  Round-trips to_string() exactly.  Throws ParseError with
// the offending position, UnknownVariable for names missing from the
// table, and NonInvertible when a negative power of a non-unit appears.
LaurentPoly parse_laurent(std::string_view text, const VarTablePtr& table);

}  // namespace cluskein

#endif
