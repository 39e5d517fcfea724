#pragma once

#include "browder/linalg/rational_matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace browder::oracle {

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t failures = 0;
    /// Exact matrices of each failing trial.
    std::vector<std::string> counterexamples;

    bool passed() const { return failures == 0; }
};

/// Random Gaussian-rational matrix of the given shape and rank (small numerators and denominators).
linalg::RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t rank);
/// Random shape and a rank that is full or deficient with comparable probability.
linalg::RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols);

/// For T: X -> Y and S: Y -> Z,
/// dim N(T) + dim N(S) + dim Z/R(ST) = dim N(ST) + dim Y/R(T) + dim Z/R(S).
SuiteReport run_six_term(std::size_t trials, std::uint64_t seed);

/// Two-of-three laws for [[A, C], [0, B]]: if two of A, B, M are invertible (Fredholm, Weyl,
/// Browder) then so is the third.
SuiteReport run_two_of_three(std::size_t trials, std::uint64_t seed);

/// Corner criteria: M is injective iff A and the compression of C from N(B) to R(A)^perp are;
/// surjective dually; invertible iff A injective, B surjective and the compression invertible.
SuiteReport run_corner(std::size_t trials, std::uint64_t seed);

/// Suite by CLI name: "six-term", "two-of-three" or "corner".
SuiteReport run_suite(std::string_view name, std::size_t trials, std::uint64_t seed);

}  // namespace browder::oracle
