#pragma once

#include "browder/numeric/gauss_rational.hpp"
#include "browder/numeric/num.hpp"
#include "browder/symbol/polynomial.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace browder {

/// Trigonometric (Laurent) polynomial p(z) = sum_j c_j z^j with Gaussian-rational coefficients.
/// The stored exponent range is tight: both end coefficients are nonzero unless p == 0.
class LaurentSymbol {
public:
    LaurentSymbol() = default;
    LaurentSymbol(long lowest_exponent, std::vector<GaussQ> coeffs);
    explicit LaurentSymbol(const std::map<long, GaussQ>& terms);
    LaurentSymbol(GaussQ constant) : LaurentSymbol(0, {std::move(constant)}) {}  // NOLINT

    static LaurentSymbol monomial(GaussQ c, long exponent) { return LaurentSymbol(exponent, {std::move(c)}); }
    static LaurentSymbol z() { return monomial(GaussQ(1), 1); }
    static LaurentSymbol zinv() { return monomial(GaussQ(1), -1); }
    /// lead * z^shift * prod (z - root_k)
    static LaurentSymbol from_roots(GaussQ lead, long shift, const std::vector<GaussQ>& roots);

    bool is_zero() const { return coeffs_.empty(); }
    long low() const { return low_; }
    long high() const { return low_ + static_cast<long>(coeffs_.size()) - 1; }
    GaussQ coeff(long exponent) const;
    const std::vector<GaussQ>& coeffs() const { return coeffs_; }

    /// q(z) = z^{-low} p(z), an ordinary polynomial with q(0) != 0.
    Poly polynomial_part() const { return Poly(coeffs_); }

    GaussQ operator()(const GaussQ& z) const;
    Num operator()(const Num& z) const;

    /// conj(p)(1/z): the symbol of the adjoint Toeplitz operator.
    LaurentSymbol adjoint() const;
    /// p - lambda.
    LaurentSymbol translate(const GaussQ& lambda) const;

    friend LaurentSymbol operator+(const LaurentSymbol& a, const LaurentSymbol& b);
    friend LaurentSymbol operator-(const LaurentSymbol& a, const LaurentSymbol& b);
    friend LaurentSymbol operator*(const LaurentSymbol& a, const LaurentSymbol& b);
    friend LaurentSymbol operator-(const LaurentSymbol& a);
    friend bool operator==(const LaurentSymbol& a, const LaurentSymbol& b) {
        return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
    }

private:
    void normalize();
    long low_ = 0;
    std::vector<GaussQ> coeffs_;
};

LaurentSymbol multiply(const LaurentSymbol& p, const LaurentSymbol& q);

/// True iff p has a zero on |z| = 1. Decided exactly. Throws ZeroSymbol when p == 0.
bool circle_zero_test(const LaurentSymbol& p);

/// Winding number of p about 0 along the unit circle, exact.
/// Throws CircleZero when p vanishes on the circle and ZeroSymbol when p == 0.
long winding_number(const LaurentSymbol& p);

/// Square matrix (dimension 1 or 2) of Laurent symbols.
class MatrixSymbol {
public:
    MatrixSymbol() : MatrixSymbol(1) {}
    explicit MatrixSymbol(std::size_t dim);
    MatrixSymbol(LaurentSymbol scalar);  // NOLINT: a scalar symbol is a 1x1 matrix symbol
    static MatrixSymbol identity(std::size_t dim);
    static MatrixSymbol upper_triangular(LaurentSymbol a, LaurentSymbol c, LaurentSymbol b);

    std::size_t dim() const { return dim_; }
    LaurentSymbol& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
    const LaurentSymbol& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }

    bool is_zero() const;
    /// Largest and smallest exponent over all nonzero entries (0, 0 for the zero symbol).
    long high() const;
    long low() const;

    MatrixSymbol adjoint() const;
    /// Subtracts lambda from every diagonal entry.
    MatrixSymbol translate(const GaussQ& lambda) const;

    friend MatrixSymbol operator+(const MatrixSymbol& a, const MatrixSymbol& b);
    friend MatrixSymbol operator*(const MatrixSymbol& a, const MatrixSymbol& b);
    friend bool operator==(const MatrixSymbol& a, const MatrixSymbol& b) {
        return a.dim_ == b.dim_ && a.entries_ == b.entries_;
    }

private:
    std::size_t dim_;
    std::vector<LaurentSymbol> entries_;
};

/// Determinant by cofactor expansion.
LaurentSymbol det_symbol(const MatrixSymbol& p);

}  // namespace browder
