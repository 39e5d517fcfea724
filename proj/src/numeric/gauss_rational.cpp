#include "browder/numeric/gauss_rational.hpp"

#include "browder/error.hpp"

#include <cctype>
#include <string>

namespace browder {

GaussQ& GaussQ::operator+=(const GaussQ& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussQ& GaussQ::operator-=(const GaussQ& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussQ& GaussQ::operator*=(const GaussQ& o) {
    if (o.is_real()) {
        re_ *= o.re_;
        im_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussQ& GaussQ::operator/=(const GaussQ& o) {
    if (o.is_zero()) throw Error("GaussQ: division by zero");
    if (o.is_real()) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    const mpq_class n = o.norm();
    mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
    mpq_class i = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

std::string rational_to_string(const mpq_class& q) {
    return q.get_str();
}

std::string GaussQ::to_string() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string s;
    if (sgn(re_) != 0) {
        s = re_.get_str();
        if (sgn(im_) > 0) s += "+";
    }
    if (im_ == 1) {
        s += "i";
    } else if (im_ == -1) {
        s += "-i";
    } else {
        s += im_.get_str() + "i";
    }
    return s;
}

GaussQ pow(const GaussQ& base, long exponent) {
    if (exponent < 0) return pow(GaussQ(1) / base, -exponent);
    GaussQ result(1);
    GaussQ b = base;
    while (exponent > 0) {
        if (exponent & 1) result *= b;
        b *= b;
        exponent >>= 1;
    }
    return result;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpq_class parse_decimal(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_part = s.substr(e + 1);
        s = s.substr(0, e);
        bool exp_negative = false;
        if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
            exp_negative = exp_part.front() == '-';
            exp_part.remove_prefix(1);
        }
        if (!all_digits(exp_part) || exp_part.size() > 6) throw ParseError("bad exponent in number");
        exponent = std::stol(std::string(exp_part));
        if (exp_negative) exponent = -exponent;
    }
    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = s.substr(0, dot);
        std::string_view frac_part = s.substr(dot + 1);
        if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)) ||
            (int_part.empty() && frac_part.empty()))
            throw ParseError("malformed decimal '" + std::string(s) + "'");
        digits = std::string(int_part) + std::string(frac_part);
        exponent -= static_cast<long>(frac_part.size());
    } else {
        if (!all_digits(s)) throw ParseError("malformed number '" + std::string(s) + "'");
        digits = std::string(s);
    }
    mpz_class mantissa(digits, 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    mpq_class q = exponent >= 0 ? mpq_class(mantissa * scale) : mpq_class(mantissa, scale);
    q.canonicalize();
    return negative ? mpq_class(-q) : q;
}

}  // namespace

mpq_class parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) throw ParseError("empty number");
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        mpq_class num = parse_decimal(trim(s.substr(0, slash)));
        mpq_class den = parse_decimal(trim(s.substr(slash + 1)));
        if (sgn(den) == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
        mpq_class q = num / den;
        q.canonicalize();
        return q;
    }
    return parse_decimal(s);
}

GaussQ parse_gauss(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) throw ParseError("empty complex number");
    if (auto comma = s.find(','); comma != std::string_view::npos)
        return GaussQ(parse_rational(s.substr(0, comma)), parse_rational(s.substr(comma + 1)));
    if (s.back() != 'i') return GaussQ(parse_rational(s));
    s.remove_suffix(1);
    // Split at the last sign that is not the leading sign and not part of an exponent.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    auto imag_of = [](std::string_view t) -> mpq_class {
        t = trim(t);
        if (t.empty() || t == "+") return 1;
        if (t == "-") return -1;
        return parse_rational(t);
    };
    if (split == std::string_view::npos) return GaussQ(0, imag_of(s));
    return GaussQ(parse_rational(s.substr(0, split)), imag_of(s.substr(split)));
}

}  // namespace browder
