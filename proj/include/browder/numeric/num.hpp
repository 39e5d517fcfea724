#pragma once

#include "browder/numeric/ball.hpp"
#include "browder/numeric/gauss_rational.hpp"
#include "browder/tri.hpp"

#include <variant>

namespace browder {

/// A complex scalar that is exact (Gaussian rational) whenever every input was exact,
/// and a certified ball otherwise.
class Num {
public:
    Num() : value_(GaussQ()) {}
    Num(long v) : value_(GaussQ(v)) {}  // NOLINT
    Num(GaussQ q) : value_(std::move(q)) {}  // NOLINT
    Num(Ball b) : value_(std::move(b)) {}  // NOLINT

    bool is_exact() const { return std::holds_alternative<GaussQ>(value_); }
    const GaussQ& exact() const { return std::get<GaussQ>(value_); }
    /// Ball enclosure; exact values are rounded at `prec` bits (or their own ball precision).
    Ball ball(mpfr_prec_t prec = 128) const;
    /// Precision of the ball representation, 0 when exact.
    mpfr_prec_t prec() const;

    /// yes: certainly zero (exact zero); no: certainly nonzero; undecided: ball containing zero.
    Tri is_zero() const;
    bool is_exact_zero() const { return is_exact() && exact().is_zero(); }

    Num conj() const;
    Num operator-() const;
    friend Num operator+(const Num& a, const Num& b);
    friend Num operator-(const Num& a, const Num& b);
    friend Num operator*(const Num& a, const Num& b);
    /// Exact division, or ball division (throws PrecisionExhausted if the divisor may vanish).
    friend Num operator/(const Num& a, const Num& b);
    Num& operator+=(const Num& o) { return *this = *this + o; }
    Num& operator-=(const Num& o) { return *this = *this - o; }
    Num& operator*=(const Num& o) { return *this = *this * o; }

    /// Lower bound of the modulus (used for pivot ranking only).
    double abs_lower() const;
    double abs_upper() const;
    double re_double() const;
    double im_double() const;

    /// Structural equality: both exact and equal.
    bool exact_equals(const Num& o) const { return is_exact() && o.is_exact() && exact() == o.exact(); }

private:
    std::variant<GaussQ, Ball> value_;
};

Num pow(const Num& base, long exponent);

}  // namespace browder
