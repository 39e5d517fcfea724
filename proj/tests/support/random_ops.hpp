#pragma once

#include "browder/op/bet_operator.hpp"

#include <random>
#include <vector>

namespace browder::testing {

inline int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Nonzero rational off the unit circle: p/q with |p| != |q|, small numbers.
inline GaussQ random_root(std::mt19937_64& rng) {
    static const mpq_class choices[] = {mpq_class(1, 2), mpq_class(-1, 2), mpq_class(1, 3), mpq_class(-2, 3),
                                        mpq_class(2),    mpq_class(-2),    mpq_class(3, 2), mpq_class(-5, 2)};
    const mpq_class re = choices[uniform(rng, 0, 7)];
    if (uniform(rng, 0, 3) == 0) return GaussQ(0, re);
    return GaussQ(re);
}

/// lead * z^shift * prod (z - r_k) with rational roots off the circle; degree <= max_roots.
inline LaurentSymbol random_symbol(std::mt19937_64& rng, int max_roots = 2, int min_shift = -2, int max_shift = 1) {
    std::vector<GaussQ> roots;
    const int n = uniform(rng, 0, max_roots);
    for (int k = 0; k < n; ++k) roots.push_back(random_root(rng));
    const GaussQ lead(mpq_class(uniform(rng, 1, 3), uniform(rng, 1, 2)));
    return LaurentSymbol::from_roots(lead, uniform(rng, min_shift, max_shift), roots);
}

inline ExpPolyVector random_vector(std::mt19937_64& rng, bool allow_tail = true) {
    std::vector<Num> head;
    const int len = uniform(rng, 1, 3);
    for (int k = 0; k < len; ++k) head.push_back(Num(GaussQ(uniform(rng, -2, 2))));
    ExpPolyVector v = ExpPolyVector::from_head(head);
    if (allow_tail && uniform(rng, 0, 3) == 0) {
        const GaussQ root = uniform(rng, 0, 1) ? GaussQ(mpq_class(1, 2)) : GaussQ(mpq_class(-1, 3));
        v = v + ExpPolyVector::geometric(Root(root), Num(GaussQ(uniform(rng, 1, 2))));
    }
    return v.normalized();
}

inline std::vector<RankOne> random_terms(std::mt19937_64& rng, int max_terms, bool allow_tail = true) {
    std::vector<RankOne> terms;
    const int n = uniform(rng, 0, max_terms);
    for (int k = 0; k < n; ++k) terms.push_back(RankOne{random_vector(rng, allow_tail), random_vector(rng, allow_tail)});
    return terms;
}

/// Toeplitz operator with a random symbol plus a finite-rank perturbation.
inline BetOperator random_operator(std::mt19937_64& rng, int max_terms = 1, bool allow_tail = true) {
    return BetOperator(MatrixSymbol(random_symbol(rng)), normalize_terms(random_terms(rng, max_terms, allow_tail), 1));
}

/// Finite-rank C, sometimes with a constant or monomial symbol part.
inline BetOperator random_corner(std::mt19937_64& rng, int max_terms = 2) {
    LaurentSymbol sym;
    switch (uniform(rng, 0, 3)) {
        case 0: sym = LaurentSymbol(GaussQ(uniform(rng, 1, 2))); break;
        case 1: sym = LaurentSymbol::monomial(GaussQ(1), uniform(rng, -1, 1)); break;
        default: break;
    }
    return BetOperator(MatrixSymbol(sym), normalize_terms(random_terms(rng, max_terms), 1));
}

}  // namespace browder::testing
