#ifndef CLUSKEIN_TEST_HELPERS_HPP
#define CLUSKEIN_TEST_HELPERS_HPP

#include <random>
#include <vector>

#include "cluskein/laurent.hpp"

namespace cluskein::testing {

// Random sparse Laurent polynomial: exponents in [-3,3], coefficients in
// [-9,9] \ {0}, up to max_terms terms.  Deterministic under a caller-owned
// generator.
inline LaurentPoly random_poly(const VarTablePtr& table, std::mt19937& rng,
                               int max_terms = 5) {
    std::uniform_int_distribution<int> term_count(0, max_terms);
    std::uniform_int_distribution<int> exp_dist(-3, 3);
    std::uniform_int_distribution<int> coeff_dist(-9, 9);
    LaurentPoly p = LaurentPoly::zero(table);
    int terms = term_count(rng);
    for (int t = 0; t < terms; ++t) {
        ExpVec e(table->size());
        for (int i = 0; i < table->size(); ++i) e[i] = exp_dist(rng);
        int c = coeff_dist(rng);
        if (c == 0) c = 1;
        p += LaurentPoly::monomial(table, std::move(e), c);
    }
    return p;
}

inline LaurentPoly random_nonzero_poly(const VarTablePtr& table,
                                       std::mt19937& rng, int max_terms = 5) {
    for (;;) {
        LaurentPoly p = random_poly(table, rng, max_terms);
        if (!p.is_zero()) return p;
    }
}

}  // namespace cluskein::testing

#endif
