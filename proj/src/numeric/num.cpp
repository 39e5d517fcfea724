#include "browder/numeric/num.hpp"

#include <algorithm>
#include <cmath>

namespace browder {

Ball Num::ball(mpfr_prec_t prec) const {
    if (const auto* q = std::get_if<GaussQ>(&value_)) return Ball(*q, prec);
    return std::get<Ball>(value_);
}

mpfr_prec_t Num::prec() const {
    if (const auto* b = std::get_if<Ball>(&value_)) return b->prec();
    return 0;
}

Tri Num::is_zero() const {
    if (const auto* q = std::get_if<GaussQ>(&value_)) return tri(q->is_zero());
    return std::get<Ball>(value_).contains_zero() ? Tri::undecided : Tri::no;
}

Num Num::conj() const {
    if (const auto* q = std::get_if<GaussQ>(&value_)) return Num(q->conj());
    return Num(std::get<Ball>(value_).conj());
}

Num Num::operator-() const {
    if (const auto* q = std::get_if<GaussQ>(&value_)) return Num(-*q);
    return Num(-std::get<Ball>(value_));
}

namespace {

mpfr_prec_t common_prec(const Num& a, const Num& b) { return std::max(a.prec(), b.prec()); }

}  // namespace

Num operator+(const Num& a, const Num& b) {
    if (a.is_exact() && b.is_exact()) return Num(a.exact() + b.exact());
    if (a.is_exact_zero()) return b;
    if (b.is_exact_zero()) return a;
    const auto p = common_prec(a, b);
    return Num(a.ball(p) + b.ball(p));
}

Num operator-(const Num& a, const Num& b) {
    if (a.is_exact() && b.is_exact()) return Num(a.exact() - b.exact());
    if (b.is_exact_zero()) return a;
    const auto p = common_prec(a, b);
    return Num(a.ball(p) - b.ball(p));
}

Num operator*(const Num& a, const Num& b) {
    if (a.is_exact() && b.is_exact()) return Num(a.exact() * b.exact());
    if (a.is_exact_zero() || b.is_exact_zero()) return Num(GaussQ());
    const auto p = common_prec(a, b);
    return Num(a.ball(p) * b.ball(p));
}

Num operator/(const Num& a, const Num& b) {
    if (a.is_exact() && b.is_exact()) return Num(a.exact() / b.exact());
    if (a.is_exact_zero()) return Num(GaussQ());
    const auto p = common_prec(a, b);
    return Num(a.ball(p) / b.ball(p));
}

double Num::abs_lower() const {
    if (const auto* q = std::get_if<GaussQ>(&value_)) return std::sqrt(q->norm().get_d());
    return std::get<Ball>(value_).abs_lower();
}

double Num::abs_upper() const {
    if (const auto* q = std::get_if<GaussQ>(&value_)) return std::sqrt(q->norm().get_d());
    return std::get<Ball>(value_).abs_upper();
}

double Num::re_double() const {
    if (const auto* q = std::get_if<GaussQ>(&value_)) return q->re_double();
    return std::get<Ball>(value_).mid_re().to_double();
}

double Num::im_double() const {
    if (const auto* q = std::get_if<GaussQ>(&value_)) return q->im_double();
    return std::get<Ball>(value_).mid_im().to_double();
}

Num pow(const Num& base, long exponent) {
    if (exponent < 0) return pow(Num(1) / base, -exponent);
    Num result(1);
    Num b = base;
    while (exponent > 0) {
        if (exponent & 1) result *= b;
        exponent >>= 1;
        if (exponent > 0) b *= b;
    }
    return result;
}

}  // namespace browder
