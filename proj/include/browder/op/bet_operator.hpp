#pragma once

#include "browder/linalg/certified_elimination.hpp"
#include "browder/op/exppoly.hpp"
#include "browder/symbol/laurent.hpp"

#include <cstddef>
#include <vector>

namespace browder {

/// x -> <x, v> u.
struct RankOne {
    ExpPolyVector u;
    ExpPolyVector v;
};

/// Banded eventually-Toeplitz operator on l2(N)^dim: the block Toeplitz operator of a matrix
/// Laurent symbol plus a finite sum of rank-one terms with exponential-polynomial factors.
/// Convention: T(p)_{jk} = p_{j-k}, so the symbol z is the forward shift.
class BetOperator {
public:
    BetOperator() : BetOperator(MatrixSymbol(1)) {}
    explicit BetOperator(MatrixSymbol symbol, std::vector<RankOne> perturbation = {});

    static BetOperator identity(std::size_t dim = 1) { return BetOperator(MatrixSymbol::identity(dim)); }
    static BetOperator zero(std::size_t dim = 1) { return BetOperator(MatrixSymbol(dim)); }
    static BetOperator toeplitz(const LaurentSymbol& p) { return BetOperator(MatrixSymbol(p)); }
    static BetOperator shift() { return toeplitz(LaurentSymbol::z()); }
    static BetOperator backward_shift() { return toeplitz(LaurentSymbol::zinv()); }
    static BetOperator rank_one(ExpPolyVector u, ExpPolyVector v);

    std::size_t dim() const { return symbol_.dim(); }
    const MatrixSymbol& symbol() const { return symbol_; }
    const std::vector<RankOne>& perturbation() const { return terms_; }

    ExpPolyVector apply(const ExpPolyVector& x) const;
    /// Matrix entry between (row component, row index) and (column component, column index).
    Num entry(std::size_t row_comp, std::size_t row, std::size_t col_comp, std::size_t col) const;
    /// Leading n x n section of every block, indexed comp * n + i.
    linalg::NumMatrix window(std::size_t n) const;

    bool has_tails() const;

private:
    MatrixSymbol symbol_;
    std::vector<RankOne> terms_;
};

/// Block Toeplitz operator of `p` applied to x.
ExpPolyVector apply_toeplitz(const MatrixSymbol& p, const ExpPolyVector& x);

/// Drops zero terms, merges finitely supported terms into a minimal set of column terms,
/// and merges tail terms sharing a factor.
std::vector<RankOne> normalize_terms(const std::vector<RankOne>& terms, std::size_t dim);

BetOperator bet_add(const BetOperator& s, const BetOperator& t);
BetOperator bet_sub(const BetOperator& s, const BetOperator& t);
BetOperator bet_scale(const Num& c, const BetOperator& t);
BetOperator bet_compose(const BetOperator& s, const BetOperator& t);
BetOperator bet_adjoint(const BetOperator& t);
/// t^k for k >= 0.
BetOperator bet_power(const BetOperator& t, std::size_t k);
/// t - lambda I.
BetOperator translate(const BetOperator& t, const GaussQ& lambda);
/// [[A, C], [0, B]] on l2 + l2.
BetOperator assemble_MC(const BetOperator& a, const BetOperator& b, const BetOperator& c);

}  // namespace browder
