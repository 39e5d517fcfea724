#pragma once

#include "browder/numeric/num.hpp"

#include <cstddef>
#include <vector>

namespace browder::linalg {

/// Dense matrix of exact-or-ball scalars.
class NumMatrix {
public:
    NumMatrix() = default;
    NumMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Num& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Num& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    bool all_exact() const;
    NumMatrix conjugate_transpose() const;
    friend NumMatrix operator*(const NumMatrix& a, const NumMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Num> entries_;
};

/// Outcome of an elimination in which every pivot is certified nonzero.
///
/// The true rank lies in [rank_lo, rank_hi]. `null_basis` spans the null space under the
/// assumption that every uncertain residual entry is zero, i.e. it is the exact null space
/// when rank equals rank_lo.
struct CertifiedRank {
    std::size_t rank_lo = 0;
    std::size_t rank_hi = 0;
    std::vector<std::vector<Num>> null_basis;
    /// Columns holding certified pivots; they index a maximal independent set of columns when decided.
    std::vector<std::size_t> pivot_cols;

    bool decided() const { return rank_lo == rank_hi; }
};

CertifiedRank certified_rank(const NumMatrix& m);

/// Solves the square system m x = b when m is certified invertible; throws PrecisionExhausted otherwise.
std::vector<Num> solve(const NumMatrix& m, const std::vector<Num>& b);

/// Certified inverse of a square matrix; throws PrecisionExhausted if invertibility cannot be certified.
NumMatrix inverse(const NumMatrix& m);

}  // namespace browder::linalg
