#include "browder/symbol/laurent.hpp"

#include "browder/error.hpp"

#include <algorithm>

namespace browder {

LaurentSymbol::LaurentSymbol(long lowest_exponent, std::vector<GaussQ> coeffs)
    : low_(lowest_exponent), coeffs_(std::move(coeffs)) {
    normalize();
}

LaurentSymbol::LaurentSymbol(const std::map<long, GaussQ>& terms) {
    if (terms.empty()) return;
    low_ = terms.begin()->first;
    coeffs_.resize(static_cast<std::size_t>(terms.rbegin()->first - low_ + 1));
    for (const auto& [e, c] : terms) coeffs_[static_cast<std::size_t>(e - low_)] += c;
    normalize();
}

void LaurentSymbol::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    std::size_t lead_zeros = 0;
    while (lead_zeros < coeffs_.size() && coeffs_[lead_zeros].is_zero()) ++lead_zeros;
    if (lead_zeros > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead_zeros));
        low_ += static_cast<long>(lead_zeros);
    }
    if (coeffs_.empty()) low_ = 0;
}

LaurentSymbol LaurentSymbol::from_roots(GaussQ lead, long shift, const std::vector<GaussQ>& roots) {
    Poly p{std::move(lead)};
    for (const auto& r : roots) p = p * Poly{-r, GaussQ(1)};
    return LaurentSymbol(shift, p.coeffs());
}

GaussQ LaurentSymbol::coeff(long exponent) const {
    if (exponent < low_ || exponent > high() || coeffs_.empty()) return GaussQ();
    return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

GaussQ LaurentSymbol::operator()(const GaussQ& z) const {
    GaussQ acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc * pow(z, low_);
}

Num LaurentSymbol::operator()(const Num& z) const {
    Num acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + Num(*it);
    return acc * pow(z, low_);
}

LaurentSymbol LaurentSymbol::adjoint() const {
    std::vector<GaussQ> c(coeffs_.rbegin(), coeffs_.rend());
    for (auto& x : c) x = x.conj();
    return LaurentSymbol(-high(), std::move(c));
}

LaurentSymbol LaurentSymbol::translate(const GaussQ& lambda) const {
    return *this - LaurentSymbol(lambda);
}

LaurentSymbol operator+(const LaurentSymbol& a, const LaurentSymbol& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const long lo = std::min(a.low_, b.low_);
    const long hi = std::max(a.high(), b.high());
    std::vector<GaussQ> c(static_cast<std::size_t>(hi - lo + 1));
    for (long e = a.low_; e <= a.high(); ++e) c[static_cast<std::size_t>(e - lo)] += a.coeff(e);
    for (long e = b.low_; e <= b.high(); ++e) c[static_cast<std::size_t>(e - lo)] += b.coeff(e);
    return LaurentSymbol(lo, std::move(c));
}

LaurentSymbol operator-(const LaurentSymbol& a) {
    std::vector<GaussQ> c = a.coeffs_;
    for (auto& x : c) x = -x;
    return LaurentSymbol(a.low_, std::move(c));
}

LaurentSymbol operator-(const LaurentSymbol& a, const LaurentSymbol& b) { return a + (-b); }

LaurentSymbol operator*(const LaurentSymbol& a, const LaurentSymbol& b) {
    if (a.is_zero() || b.is_zero()) return LaurentSymbol();
    const Poly p = a.polynomial_part() * b.polynomial_part();
    return LaurentSymbol(a.low_ + b.low_, p.coeffs());
}

LaurentSymbol multiply(const LaurentSymbol& p, const LaurentSymbol& q) { return p * q; }

bool circle_zero_test(const LaurentSymbol& p) {
    if (p.is_zero()) throw ZeroSymbol("circle_zero_test: symbol is identically zero");
    return has_unit_circle_root(p.polynomial_part());
}

long winding_number(const LaurentSymbol& p) {
    if (p.is_zero()) throw ZeroSymbol("winding_number: symbol is identically zero");
    if (circle_zero_test(p)) throw CircleZero("winding_number: symbol vanishes on the unit circle");
    return static_cast<long>(count_roots_in_unit_disk(p.polynomial_part())) + p.low();
}

MatrixSymbol::MatrixSymbol(std::size_t dim) : dim_(dim), entries_(dim * dim) {
    if (dim < 1 || dim > 2) throw DimensionMismatch("MatrixSymbol: dimension must be 1 or 2");
}

MatrixSymbol::MatrixSymbol(LaurentSymbol scalar) : dim_(1), entries_{std::move(scalar)} {}

MatrixSymbol MatrixSymbol::identity(std::size_t dim) {
    MatrixSymbol m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = LaurentSymbol(GaussQ(1));
    return m;
}

MatrixSymbol MatrixSymbol::upper_triangular(LaurentSymbol a, LaurentSymbol c, LaurentSymbol b) {
    MatrixSymbol m(2);
    m(0, 0) = std::move(a);
    m(0, 1) = std::move(c);
    m(1, 1) = std::move(b);
    return m;
}

bool MatrixSymbol::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.is_zero(); });
}

long MatrixSymbol::high() const {
    bool any = false;
    long h = 0;
    for (const auto& e : entries_) {
        if (e.is_zero()) continue;
        h = any ? std::max(h, e.high()) : e.high();
        any = true;
    }
    return h;
}

long MatrixSymbol::low() const {
    bool any = false;
    long l = 0;
    for (const auto& e : entries_) {
        if (e.is_zero()) continue;
        l = any ? std::min(l, e.low()) : e.low();
        any = true;
    }
    return l;
}

MatrixSymbol MatrixSymbol::adjoint() const {
    MatrixSymbol m(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) m(c, r) = (*this)(r, c).adjoint();
    return m;
}

MatrixSymbol MatrixSymbol::translate(const GaussQ& lambda) const {
    MatrixSymbol m = *this;
    for (std::size_t i = 0; i < dim_; ++i) m(i, i) = m(i, i).translate(lambda);
    return m;
}

MatrixSymbol operator+(const MatrixSymbol& a, const MatrixSymbol& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch("MatrixSymbol sum: dimensions differ");
    MatrixSymbol m(a.dim_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k) m.entries_[k] = a.entries_[k] + b.entries_[k];
    return m;
}

MatrixSymbol operator*(const MatrixSymbol& a, const MatrixSymbol& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch("MatrixSymbol product: dimensions differ");
    MatrixSymbol m(a.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i)
        for (std::size_t j = 0; j < a.dim_; ++j)
            for (std::size_t k = 0; k < a.dim_; ++k) m(i, j) = m(i, j) + a(i, k) * b(k, j);
    return m;
}

LaurentSymbol det_symbol(const MatrixSymbol& p) {
    if (p.dim() == 1) return p(0, 0);
    return p(0, 0) * p(1, 1) - p(0, 1) * p(1, 0);
}

}  // namespace browder
