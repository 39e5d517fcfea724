#include "browder/numeric/ball.hpp"

#include "browder/error.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace browder {

BigFloat::BigFloat(mpfr_prec_t prec) {
    mpfr_init2(value_, prec);
    mpfr_set_zero(value_, 1);
    live_ = true;
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(value_, other.prec());
    mpfr_set(value_, other.value_, MPFR_RNDN);
    live_ = true;
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(value_, other.prec());
    mpfr_swap(value_, other.value_);
    live_ = true;
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(value_, other.prec());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    if (this != &other) mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat() {
    if (live_) mpfr_clear(value_);
}

std::string BigFloat::to_string(int digits) const {
    if (mpfr_zero_p(value_)) return "0";
    std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, value_);
    return std::string(buf.data());
}

namespace {

constexpr mpfr_prec_t kRadPrec = 53;

BigFloat rad_zero() { return BigFloat(kRadPrec); }

// 2^(1-prec) * (|re| + |im|), rounded up: bound for one correctly rounded operation per component.
BigFloat rounding_error(const BigFloat& re, const BigFloat& im, long extra_bits = 1) {
    BigFloat e(kRadPrec), t(kRadPrec);
    mpfr_abs(e.get(), re.get(), MPFR_RNDU);
    mpfr_set(e.get(), e.get(), MPFR_RNDU);
    mpfr_abs(t.get(), im.get(), MPFR_RNDU);
    mpfr_add(e.get(), e.get(), t.get(), MPFR_RNDU);
    mpfr_mul_2si(e.get(), e.get(), extra_bits - static_cast<long>(re.prec()), MPFR_RNDU);
    return e;
}

// |re| + |im| (upper bound of the modulus), rounded up.
BigFloat abs1_up(const Ball& b) {
    BigFloat e(kRadPrec), t(kRadPrec);
    mpfr_abs(t.get(), b.mid_re().get(), MPFR_RNDU);
    mpfr_set(e.get(), t.get(), MPFR_RNDU);
    mpfr_abs(t.get(), b.mid_im().get(), MPFR_RNDU);
    mpfr_add(e.get(), e.get(), t.get(), MPFR_RNDU);
    return e;
}

// |mid| rounded down / up.
BigFloat mid_abs(const Ball& b, mpfr_rnd_t rnd) {
    const mpfr_prec_t p = std::max<mpfr_prec_t>(b.prec(), kRadPrec);
    BigFloat s(p), t(p);
    mpfr_sqr(s.get(), b.mid_re().get(), rnd);
    mpfr_sqr(t.get(), b.mid_im().get(), rnd);
    mpfr_add(s.get(), s.get(), t.get(), rnd);
    mpfr_sqrt(s.get(), s.get(), rnd);
    return s;
}

}  // namespace

Ball::Ball() : re_(53), im_(53), rad_(rad_zero()) {}

Ball::Ball(const GaussQ& q, mpfr_prec_t prec) : re_(prec), im_(prec), rad_(rad_zero()) {
    const int tr = mpfr_set_q(re_.get(), q.re().get_mpq_t(), MPFR_RNDN);
    const int ti = mpfr_set_q(im_.get(), q.im().get_mpq_t(), MPFR_RNDN);
    if (tr != 0 || ti != 0) rad_ = rounding_error(re_, im_);
}

Ball::Ball(BigFloat re, BigFloat im, BigFloat rad) : re_(std::move(re)), im_(std::move(im)), rad_(std::move(rad)) {
    if (rad_.prec() != kRadPrec) {
        BigFloat r(kRadPrec);
        mpfr_set(r.get(), rad_.get(), MPFR_RNDU);
        rad_ = std::move(r);
    }
}

Ball Ball::conj() const {
    Ball out = *this;
    mpfr_neg(out.im_.get(), out.im_.get(), MPFR_RNDN);
    return out;
}

Ball Ball::operator-() const {
    Ball out = *this;
    mpfr_neg(out.re_.get(), out.re_.get(), MPFR_RNDN);
    mpfr_neg(out.im_.get(), out.im_.get(), MPFR_RNDN);
    return out;
}

Ball operator+(const Ball& a, const Ball& b) {
    const mpfr_prec_t p = std::max(a.prec(), b.prec());
    BigFloat re(p), im(p), rad(kRadPrec);
    const int tr = mpfr_add(re.get(), a.re_.get(), b.re_.get(), MPFR_RNDN);
    const int ti = mpfr_add(im.get(), a.im_.get(), b.im_.get(), MPFR_RNDN);
    mpfr_add(rad.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
    if (tr != 0 || ti != 0) mpfr_add(rad.get(), rad.get(), rounding_error(re, im).get(), MPFR_RNDU);
    return Ball(std::move(re), std::move(im), std::move(rad));
}

Ball operator-(const Ball& a, const Ball& b) { return a + (-b); }

Ball operator*(const Ball& a, const Ball& b) {
    const mpfr_prec_t p = std::max(a.prec(), b.prec());
    BigFloat re(p), im(p), rad(kRadPrec), t(kRadPrec);
    const int tr = mpfr_fmms(re.get(), a.re_.get(), b.re_.get(), a.im_.get(), b.im_.get(), MPFR_RNDN);
    const int ti = mpfr_fmma(im.get(), a.re_.get(), b.im_.get(), a.im_.get(), b.re_.get(), MPFR_RNDN);
    // |a|*rb + |b|*ra + ra*rb
    mpfr_mul(rad.get(), abs1_up(a).get(), b.rad_.get(), MPFR_RNDU);
    mpfr_mul(t.get(), abs1_up(b).get(), a.rad_.get(), MPFR_RNDU);
    mpfr_add(rad.get(), rad.get(), t.get(), MPFR_RNDU);
    mpfr_mul(t.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
    mpfr_add(rad.get(), rad.get(), t.get(), MPFR_RNDU);
    if (tr != 0 || ti != 0) mpfr_add(rad.get(), rad.get(), rounding_error(re, im).get(), MPFR_RNDU);
    return Ball(std::move(re), std::move(im), std::move(rad));
}

Ball Ball::inverse() const {
    if (contains_zero()) throw PrecisionExhausted("ball division: divisor not certified nonzero");
    const mpfr_prec_t p = prec();
    BigFloat d(p + 8), re(p), im(p), rad(kRadPrec), t(kRadPrec);
    mpfr_sqr(d.get(), re_.get(), MPFR_RNDN);
    mpfr_fma(d.get(), im_.get(), im_.get(), d.get(), MPFR_RNDN);
    mpfr_div(re.get(), re_.get(), d.get(), MPFR_RNDN);
    mpfr_div(im.get(), im_.get(), d.get(), MPFR_RNDN);
    mpfr_neg(im.get(), im.get(), MPFR_RNDN);
    // Propagated radius: r / (|m| (|m| - r)).
    BigFloat lo = mid_abs(*this, MPFR_RNDD);
    BigFloat lo53(kRadPrec);
    mpfr_set(lo53.get(), lo.get(), MPFR_RNDD);
    mpfr_sub(t.get(), lo53.get(), rad_.get(), MPFR_RNDD);
    mpfr_mul(t.get(), t.get(), lo53.get(), MPFR_RNDD);
    mpfr_div(rad.get(), rad_.get(), t.get(), MPFR_RNDU);
    // Three roundings in the midpoint.
    mpfr_add(rad.get(), rad.get(), rounding_error(re, im, 3).get(), MPFR_RNDU);
    return Ball(std::move(re), std::move(im), std::move(rad));
}

Ball operator/(const Ball& a, const Ball& b) { return a * b.inverse(); }

bool Ball::contains_zero() const {
    BigFloat lo = mid_abs(*this, MPFR_RNDD);
    return mpfr_cmp(lo.get(), rad_.get()) <= 0;
}

bool Ball::overlaps(const Ball& other) const {
    Ball diff = *this - other;
    return diff.contains_zero();
}

bool Ball::inside_unit_disk() const {
    BigFloat hi = mid_abs(*this, MPFR_RNDU);
    BigFloat t(kRadPrec);
    mpfr_set(t.get(), hi.get(), MPFR_RNDU);
    mpfr_add(t.get(), t.get(), rad_.get(), MPFR_RNDU);
    return mpfr_cmp_ui(t.get(), 1) < 0;
}

bool Ball::outside_unit_disk() const {
    BigFloat lo = mid_abs(*this, MPFR_RNDD);
    BigFloat t(std::max<mpfr_prec_t>(lo.prec(), kRadPrec));
    mpfr_sub(t.get(), lo.get(), rad_.get(), MPFR_RNDD);
    return mpfr_cmp_ui(t.get(), 1) > 0;
}

double Ball::abs_lower() const {
    BigFloat lo = mid_abs(*this, MPFR_RNDD);
    BigFloat t(kRadPrec);
    mpfr_sub(t.get(), lo.get(), rad_.get(), MPFR_RNDD);
    const double v = mpfr_get_d(t.get(), MPFR_RNDD);
    return v > 0 ? v : 0.0;
}

double Ball::abs_upper() const {
    BigFloat hi = mid_abs(*this, MPFR_RNDU);
    BigFloat t(kRadPrec);
    mpfr_add(t.get(), hi.get(), rad_.get(), MPFR_RNDU);
    return mpfr_get_d(t.get(), MPFR_RNDU);
}

BigFloat Ball::abs_upper_big() const {
    BigFloat hi = mid_abs(*this, MPFR_RNDU);
    BigFloat t(kRadPrec);
    mpfr_add(t.get(), hi.get(), rad_.get(), MPFR_RNDU);
    return t;
}

Ball Ball::with_radius_added(double extra) const {
    Ball out = *this;
    BigFloat e(kRadPrec);
    mpfr_set_d(e.get(), std::fabs(extra), MPFR_RNDU);
    mpfr_add(out.rad_.get(), out.rad_.get(), e.get(), MPFR_RNDU);
    return out;
}

}  // namespace browder
