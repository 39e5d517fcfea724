#pragma once

#include "browder/numeric/gauss_rational.hpp"
#include "browder/numeric/num.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace browder {

/// Univariate polynomial with Gaussian-rational coefficients, stored in ascending order
/// and kept trimmed (the zero polynomial has no coefficients).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<GaussQ> ascending);
    Poly(std::initializer_list<GaussQ> ascending) : Poly(std::vector<GaussQ>(ascending)) {}

    static Poly monomial(GaussQ c, std::size_t degree);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const GaussQ& lead() const { return coeffs_.back(); }
    GaussQ coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : GaussQ(); }
    const std::vector<GaussQ>& coeffs() const { return coeffs_; }

    GaussQ operator()(const GaussQ& z) const;
    Num operator()(const Num& z) const;

    Poly derivative() const;
    Poly monic() const;
    /// Reciprocal-conjugate z^deg * conj(p)(1/z): roots map to 1/conj(root).
    Poly reciprocal_conj() const;
    Poly conj_coeffs() const;
    /// Number of roots at the origin (multiplicity of z).
    std::size_t zero_root_multiplicity() const;
    /// Divides out z^zero_root_multiplicity().
    Poly strip_zero_roots() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const GaussQ& s, const Poly& p);
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    /// Euclidean division; throws on a zero divisor.
    std::pair<Poly, Poly> divmod(const Poly& d) const;

private:
    void trim();
    std::vector<GaussQ> coeffs_;
};

/// Monic gcd (zero if both arguments are zero).
Poly gcd(Poly a, Poly b);

/// Squarefree decomposition p = c * prod_k f_k^k; returns (f_k, k) with deg f_k >= 1.
std::vector<std::pair<Poly, std::size_t>> squarefree_decomposition(const Poly& p);

/// Number of distinct real roots of a polynomial with rational coefficients (Sturm).
std::size_t count_real_roots(const std::vector<mpq_class>& ascending);

/// Exact: does p have a root on the unit circle?
bool has_unit_circle_root(const Poly& p);

/// Exact number of roots strictly inside the unit disk, with multiplicity.
/// Precondition: no root on the unit circle (throws CircleZero otherwise).
std::size_t count_roots_in_unit_disk(const Poly& p);

}  // namespace browder
