#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cluskein/laurent.hpp"
#include "cluskein/parse.hpp"
#include "helpers.hpp"

using namespace cluskein;
using cluskein::testing::random_nonzero_poly;
using cluskein::testing::random_poly;

namespace {

VarTablePtr xtable3() { return VarTable::ambient({"x1", "x2", "x3"}); }

LaurentPoly var(const VarTablePtr& t, int i) {
    return LaurentPoly::variable(t, i);
}

}  // namespace

TEST_CASE("variable injection and unit cancellation") {
    auto t = VarTable::ambient({"x1", "x2", "x3", "v2"});
    auto x1 = var(t, 0);
    CHECK(x1.to_string() == "x1");
    CHECK(x1.term_count() == 1);

    auto v2 = var(t, 3);
    CHECK(v2.to_string() == "v2");

    // variable * variable^{-1 via exact_divide} = 1
    auto one = exact_divide(x1 * x1, x1 * x1);
    CHECK(one.is_one());
    CHECK_THROWS_AS(var(t, 7), UnknownVariable);
}

TEST_CASE("add: identity, cancellation, Ptolemy binomial") {
    auto t = VarTable::ambient({"x1", "x2", "x3", "x4"});
    auto x1 = var(t, 0), x2 = var(t, 1), x3 = var(t, 2), x4 = var(t, 3);

    CHECK(x1 + LaurentPoly::zero(t) == x1);
    CHECK((x1 + LaurentPoly::constant(t, -1) * x1).is_zero());

    auto binom = x2 * x4 + x1 * x3;
    CHECK(binom.term_count() == 2);
    CHECK(binom.to_string() == "x1*x3 + x2*x4");
}

TEST_CASE("add rejects mismatched tables") {
    auto a = LaurentPoly::variable(xtable3(), 0);
    auto b = LaurentPoly::variable(VarTable::ambient({"y1", "y2"}), 0);
    CHECK_THROWS_AS(a + b, TableMismatch);
}

TEST_CASE("mul: squares, difference of squares, Ptolemy product") {
    auto t = VarTable::ambient({"x", "x1", "x2", "x3", "x4"});
    auto x = var(t, 0), x1 = var(t, 1), x2 = var(t, 2), x3 = var(t, 3),
         x4 = var(t, 4);

    CHECK((x1 * x1).to_string() == "x1^2");
    CHECK(((x1 + x2) * (x1 - x2)) == x1 * x1 - x2 * x2);

    // x * x' with x' = (x1*x3 + x2*x4)/x recovers the Ptolemy binomial.
    auto binom = x1 * x3 + x2 * x4;
    auto xprime = exact_divide(binom, x);
    CHECK(x * xprime == binom);
}

TEST_CASE("mul enforces invertibility on restricted tables") {
    auto t = VarTable::with_invertible({"x1", "x2"}, {true, false});
    auto inv_x1 = LaurentPoly::monomial(t, {-1, 0}, 1);  // allowed
    CHECK(inv_x1.to_string() == "x1^-1");
    CHECK_THROWS_AS(LaurentPoly::monomial(t, {0, -1}, 1), NonInvertible);
}

TEST_CASE("exact_divide: monomial divisor shifts exponents") {
    auto t = VarTable::ambient({"x1", "x2", "x3", "x4", "x5"});
    auto x1 = var(t, 0), x2 = var(t, 1), x3 = var(t, 2), x4 = var(t, 3),
         x5 = var(t, 4);
    auto q = exact_divide(x1 * x3 + x2 * x4, x5);
    CHECK(q.to_string() == "x1*x3*x5^-1 + x2*x4*x5^-1");
}

TEST_CASE("exact_divide: exact factor") {
    auto t = xtable3();
    auto x1 = var(t, 0), x2 = var(t, 1);
    auto q = exact_divide(x1 * x1 - x2 * x2, x1 + x2);
    CHECK(q == x1 - x2);
}

TEST_CASE("exact_divide: Markov-seed exchange binomial divides exactly") {
    // Column 3 of the once-punctured-torus matrix has b_13 = -2, b_23 = 2,
    // so the exchange binomial at k = 3 is x2^2 + x1^2.
    auto t = xtable3();
    auto x1 = var(t, 0), x2 = var(t, 1), x3 = var(t, 2);
    auto binom = pow(x2, 2) + pow(x1, 2);
    auto x3p = exact_divide(binom, x3);
    CHECK(x3p.to_string() == "x1^2*x3^-1 + x2^2*x3^-1");
    CHECK(x3p * x3 == binom);
}

TEST_CASE("exact_divide failure carries the remainder") {
    auto t = xtable3();
    auto x1 = var(t, 0), x2 = var(t, 1);
    bool threw = false;
    try {
        exact_divide(x1 * x1 + x2, x1 + x2);
    } catch (const InexactDivision& e) {
        threw = true;
        CHECK(!e.remainder.is_zero());
    }
    CHECK(threw);
    CHECK_THROWS_AS(exact_divide(x1, LaurentPoly::zero(t)), DivisionByZero);
}

TEST_CASE("substitute: images, identity, declared inverses") {
    auto t = xtable3();
    auto x1 = var(t, 0), x2 = var(t, 1), x3 = var(t, 2);

    Assignment sq;
    sq.emplace(0, SubstImage(x2 + x3));
    CHECK(substitute(x1 * x1, sq) == (x2 + x3) * (x2 + x3));

    CHECK(substitute(x1, {}) == x1);

    // Negative exponent of a unit-monomial image needs no declared inverse.
    Assignment mono;
    mono.emplace(0, SubstImage(x2 * x3));
    auto p = LaurentPoly::monomial(t, {-1, 0, 0}, 1);
    CHECK(substitute(p, mono).to_string() == "x2^-1*x3^-1");

    // Non-unit into a negative exponent requires a declared inverse.
    Assignment nonunit;
    nonunit.emplace(0, SubstImage(x2 + x3));
    CHECK_THROWS_AS(substitute(p, nonunit), SubstitutionError);

    // A wrong declared inverse is rejected.
    Assignment wrong;
    wrong.emplace(0, SubstImage(x2 + x3, x2));
    CHECK_THROWS_AS(substitute(p, wrong), SubstitutionError);
}

TEST_CASE("substitute: digon vertex identity shape") {
    // v2 * xbar * xbar' with v2 -> (x2b + x3b) * (xbar*xbar')^{-1}
    // collapses to x2b + x3b.  All arcs here are initial edges.
    auto t = VarTable::ambient({"xa", "xb", "x2b", "x3b", "v2"});
    auto xa = var(t, 0), xb = var(t, 1), x2b = var(t, 2), x3b = var(t, 3),
         v2 = var(t, 4);
    auto image = exact_divide(x2b + x3b, xa * xb);
    Assignment sigma;
    sigma.emplace(4, SubstImage(image));
    CHECK(substitute(v2 * xa * xb, sigma) == x2b + x3b);
}

TEST_CASE("display form is sorted and round-trips through the parser") {
    auto t = xtable3();
    auto x1 = var(t, 0), x2 = var(t, 1), x3 = var(t, 2);
    auto p = LaurentPoly::constant(t, 2) * x2 +
             pow(x1, 2) * LaurentPoly::monomial(t, {0, 0, -1}, 1);
    CHECK(p.to_string() == "x1^2*x3^-1 + 2*x2");
    CHECK(parse_laurent(p.to_string(), t) == p);

    CHECK(LaurentPoly::zero(t).to_string() == "0");
    CHECK((x1 - x2 - LaurentPoly::constant(t, 3)).to_string() ==
          "x1 - x2 - 3");
    CHECK(parse_laurent("(x1 + x2)^2 - 2*x1*x2", t) ==
          pow(x1, 2) + pow(x2, 2));
    CHECK_THROWS_AS(parse_laurent("x9", t), UnknownVariable);
    CHECK_THROWS_AS(parse_laurent("x1 +", t), ParseError);
    CHECK_THROWS_AS(parse_laurent("(x1+x2)^-1", t), NonInvertible);
}

TEST_CASE("property: ring axioms on random polynomials") {
    auto t = xtable3();
    std::mt19937 rng(20240517);
    for (int iter = 0; iter < 200; ++iter) {
        auto a = random_poly(t, rng);
        auto b = random_poly(t, rng);
        auto c = random_poly(t, rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("property: canonical form stores no zero coefficients") {
    auto t = xtable3();
    std::mt19937 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        auto a = random_poly(t, rng);
        auto b = random_poly(t, rng);
        auto sum = a + b;
        auto prod = a * b;
        for (const auto& [e, coeff] : sum.terms()) CHECK(coeff != 0);
        for (const auto& [e, coeff] : prod.terms()) CHECK(coeff != 0);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("property: exact_divide round-trips multiplication") {
    auto t = xtable3();
    std::mt19937 rng(99);
    for (int iter = 0; iter < 200; ++iter) {
        auto a = random_poly(t, rng);
        auto b = random_nonzero_poly(t, rng);
        CHECK(exact_divide(a * b, b) == a);
    }
}

TEST_CASE("property: substitute is a ring homomorphism") {
    auto t = xtable3();
    std::mt19937 rng(4242);
    for (int iter = 0; iter < 60; ++iter) {
        auto a = random_poly(t, rng, 3);
        auto b = random_poly(t, rng, 3);
        auto c = random_poly(t, rng, 3);
        // Unit-monomial images keep negative exponents substitutable.
        Assignment sigma;
        sigma.emplace(0, SubstImage(LaurentPoly::monomial(
                             t, {0, 1, rng() % 2 ? 1 : -1}, 1)));
        sigma.emplace(1, SubstImage(LaurentPoly::monomial(t, {0, -2, 1}, 1)));
        CHECK(substitute(a * b + c, sigma) ==
              substitute(a, sigma) * substitute(b, sigma) +
                  substitute(c, sigma));
    }
}
