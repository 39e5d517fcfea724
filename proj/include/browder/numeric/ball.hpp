#pragma once

#include "browder/numeric/gauss_rational.hpp"

#include <mpfr.h>

#include <string>

namespace browder {

/// Owning wrapper around an mpfr_t.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 53);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    mpfr_ptr get() { return value_; }
    mpfr_srcptr get() const { return value_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(value_); }
    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    /// Decimal rendering with `digits` significant digits.
    std::string to_string(int digits = 20) const;

private:
    mpfr_t value_;
    bool live_ = false;
};

/// Complex disk ball: midpoint with `prec`-bit components and a 53-bit radius rounded upward.
/// Every operation returns a ball containing all results of the operation applied to members.
class Ball {
public:
    Ball();
    Ball(const GaussQ& q, mpfr_prec_t prec);
    Ball(BigFloat re, BigFloat im, BigFloat rad);

    mpfr_prec_t prec() const { return re_.prec(); }
    const BigFloat& mid_re() const { return re_; }
    const BigFloat& mid_im() const { return im_; }
    const BigFloat& rad() const { return rad_; }

    Ball conj() const;
    Ball operator-() const;
    friend Ball operator+(const Ball& a, const Ball& b);
    friend Ball operator-(const Ball& a, const Ball& b);
    friend Ball operator*(const Ball& a, const Ball& b);
    /// Throws PrecisionExhausted if the divisor ball contains zero.
    friend Ball operator/(const Ball& a, const Ball& b);
    Ball inverse() const;

    bool contains_zero() const;
    bool overlaps(const Ball& other) const;
    /// Certified |z| < 1 for every member.
    bool inside_unit_disk() const;
    /// Certified |z| > 1 for every member.
    bool outside_unit_disk() const;

    /// Lower and upper bounds of |z| over the ball (rounded outward to double).
    double abs_lower() const;
    double abs_upper() const;
    double rad_double() const { return rad_.to_double(); }
    /// Upper bound of |z| over the ball as a 53-bit float (no double underflow).
    BigFloat abs_upper_big() const;

    Ball with_radius_added(double extra) const;

private:
    BigFloat re_;
    BigFloat im_;
    BigFloat rad_;
};

}  // namespace browder
