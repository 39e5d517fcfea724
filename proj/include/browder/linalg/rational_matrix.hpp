#pragma once

#include "browder/numeric/gauss_rational.hpp"

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace browder::linalg {

/// Dense matrix of Gaussian rationals. All arithmetic is exact.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    RationalMatrix(std::initializer_list<std::initializer_list<GaussQ>> rows);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix zero(std::size_t rows, std::size_t cols) { return RationalMatrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    GaussQ& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const GaussQ& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    std::span<const GaussQ> entries() const { return entries_; }

    RationalMatrix conjugate_transpose() const;
    bool is_zero() const;

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussQ> entries_;
};

using Vector = std::vector<GaussQ>;

/// Exact rank by fraction-free (Bareiss) elimination over the Gaussian integers.
std::size_t rank(const RationalMatrix& m);

/// Exact null-space basis (reduced row echelon form); size = cols - rank.
std::vector<Vector> kernel_basis(const RationalMatrix& m);

Vector apply(const RationalMatrix& m, const Vector& v);

struct PowerDefect {
    std::size_t alpha;  ///< cols - rank(M^k)
    std::size_t beta;   ///< rows - rank(M^k)
    friend bool operator==(const PowerDefect&, const PowerDefect&) = default;
};

/// (alpha(M^k), beta(M^k)) for k = 1..kmax. Requires a square matrix and kmax >= 1.
std::vector<PowerDefect> power_defects(const RationalMatrix& m, std::size_t kmax);

struct AscentDescent {
    std::size_t ascent;
    std::size_t descent;
};

/// Ascent and descent of a square matrix; both are at most the dimension.
AscentDescent asc_des(const RationalMatrix& m);

/// Assembles [[b00, b01], [b10, b11]]. Throws DimensionMismatch when blocks are not conformable.
RationalMatrix assemble_block(const std::array<std::array<RationalMatrix, 2>, 2>& blocks);

/// Nullity: cols - rank. Quotient dimension of the target: rows - rank.
inline std::size_t nullity(const RationalMatrix& m) { return m.cols() - rank(m); }
inline std::size_t corank(const RationalMatrix& m) { return m.rows() - rank(m); }

/// Finite-dimensional invertibility: square and full rank.
bool invertible(const RationalMatrix& m);
bool injective(const RationalMatrix& m);
bool surjective(const RationalMatrix& m);

}  // namespace browder::linalg
