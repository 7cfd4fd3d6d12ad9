/*
 * laurent.hpp
 * -----------
 * Exact sparse multivariate Laurent polynomials with integer coefficients.
 *
 * A LaurentPoly is a map from exponent vectors (one signed entry per
 * variable of a VarTable) to nonzero arbitrary-precision integers.  The
 * map is kept in canonical form at all times: no zero coefficients are
 * stored, so structural equality of the term maps is semantic equality.
 * Negative exponents are admitted only at variable indices the table
 * declares invertible.
 *
 * Terms are ordered by graded lexicographic comparison of exponent
 * vectors, which fixes a deterministic display form and doubles as the
 * monomial order for exact division.
 */
#ifndef CLUSKEIN_LAURENT_HPP
#define CLUSKEIN_LAURENT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cluskein/errors.hpp"

namespace cluskein {

using Int = boost::multiprecision::cpp_int;

// Ordered table of variable identifiers.  Indices are stable for the
// lifetime of a computation session; polynomials hold a shared pointer
// to their table.
class VarTable {
  public:
    VarTable(std::vector<std::string> names, std::vector<bool> invertible);

    // All variables invertible (the ambient Laurent ring).
    static std::shared_ptr<const VarTable> ambient(
        std::vector<std::string> names);
    static std::shared_ptr<const VarTable> with_invertible(
        std::vector<std::string> names, std::vector<bool> invertible);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(i); }
    bool invertible(int i) const { return invertible_.at(i); }
    bool all_invertible() const { return all_invertible_; }

    // Throws UnknownVariable.
    int index_of(std::string_view name) const;
    std::optional<int> find(std::string_view name) const;

    bool operator==(const VarTable& other) const {
        return names_ == other.names_ && invertible_ == other.invertible_;
    }

  private:
    std::vector<std::string> names_;
    std::vector<bool> invertible_;
    std::unordered_map<std::string, int> index_;
    bool all_invertible_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

// One signed exponent per table slot.
using ExpVec = std::vector<int>;

// Total degree first, then lexicographic.
struct GradedLexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

using TermMap = std::map<ExpVec, Int, GradedLexLess>;

class LaurentPoly {
  public:
    explicit LaurentPoly(VarTablePtr table);  // zero polynomial

    static LaurentPoly zero(VarTablePtr table);
    static LaurentPoly constant(VarTablePtr table, Int value);
    static LaurentPoly variable(VarTablePtr table, int index);
    static LaurentPoly monomial(VarTablePtr table, ExpVec exponents,
                                Int coefficient);

    const VarTablePtr& table() const { return table_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    // Single term with coefficient +1 or -1: invertible in the Laurent ring.
    bool is_unit_monomial() const;
    int term_count() const { return static_cast<int>(terms_.size()); }

    // Largest term in graded-lex order; polynomial must be nonzero.
    const std::pair<const ExpVec, Int>& leading() const;

    bool operator==(const LaurentPoly& other) const;
    bool operator!=(const LaurentPoly& other) const { return !(*this == other); }

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator+=(const LaurentPoly& b);
    LaurentPoly& operator-=(const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& b);

    // Deterministic sorted-term display, e.g. "x1^2*x3^-1 + 2*x2".
    std::string to_string() const;

    // True when every coefficient is positive.
    bool all_coefficients_positive() const;

  private:
    friend LaurentPoly pow(const LaurentPoly&, long);
    friend LaurentPoly exact_divide(const LaurentPoly&, const LaurentPoly&);
    friend class Substitution;

    // Drops zero coefficients and enforces the invertibility invariant.
    void canonicalize();
    void check_invertibility() const;

    VarTablePtr table_;
    TermMap terms_;
};

// q with q * den == num exactly, else throws.  Division by a monomial is
// exponent subtraction; otherwise the operands are shifted to ordinary
// polynomials, long-divided against the single divisor, and shifted back.
LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den);

struct InexactDivision : Error {
    InexactDivision(const std::string& what, LaurentPoly rem)
        : Error(what), remainder(std::move(rem)) {}
    LaurentPoly remainder;
};

// Nonnegative exponents always; negative exponents only for unit monomials.
LaurentPoly pow(const LaurentPoly& base, long exponent);

// Image of a variable under substitution.  When the image must be raised
// to a negative power and is not a unit monomial the caller supplies the
// inverse image explicitly; it is verified against the image.
struct SubstImage {
    LaurentPoly image;
    std::optional<LaurentPoly> inverse;

    SubstImage(LaurentPoly img) : image(std::move(img)) {}
    SubstImage(LaurentPoly img, LaurentPoly inv)
        : image(std::move(img)), inverse(std::move(inv)) {}
};

using Assignment = std::map<int, SubstImage>;

// Ring homomorphism sending assigned variables to their images and
// leaving the rest fixed.  The identity assignment returns p unchanged.
LaurentPoly substitute(const LaurentPoly& p, const Assignment& assignment);

}  // namespace cluskein

#endif
