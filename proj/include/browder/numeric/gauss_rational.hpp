#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace browder {

/// Exact complex number with rational real and imaginary parts.
class GaussQ {
public:
    GaussQ() = default;
    GaussQ(long v) : re_(v), im_(0) {}  // NOLINT: implicit by design of literals
    GaussQ(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussQ i() { return GaussQ(0, 1); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussQ conj() const { return GaussQ(re_, -im_); }
    /// |z|^2, exact.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    GaussQ& operator+=(const GaussQ& o);
    GaussQ& operator-=(const GaussQ& o);
    GaussQ& operator*=(const GaussQ& o);
    GaussQ& operator/=(const GaussQ& o);

    friend GaussQ operator+(GaussQ a, const GaussQ& b) { return a += b; }
    friend GaussQ operator-(GaussQ a, const GaussQ& b) { return a -= b; }
    friend GaussQ operator*(GaussQ a, const GaussQ& b) { return a *= b; }
    friend GaussQ operator/(GaussQ a, const GaussQ& b) { return a /= b; }
    friend GaussQ operator-(const GaussQ& a) { return GaussQ(-a.re_, -a.im_); }
    friend bool operator==(const GaussQ& a, const GaussQ& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

    /// "p/q", "p/q+r/si", "r/si" style rendering.
    std::string to_string() const;

    double re_double() const { return re_.get_d(); }
    double im_double() const { return im_.get_d(); }

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

GaussQ pow(const GaussQ& base, long exponent);

/// Parses an exact rational: integer, "p/q", or a decimal literal with optional exponent.
/// Throws ParseError on malformed input.
mpq_class parse_rational(std::string_view text);

/// Parses "a", "a,b" (real, imaginary) or "a+bi" / "a-bi" / "bi" forms.
GaussQ parse_gauss(std::string_view text);

std::string rational_to_string(const mpq_class& q);

}  // namespace browder
