#include "browder/symbol/roots.hpp"

#include "browder/error.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>

namespace browder {

namespace {

// Complex MPFR number without error tracking; used only to produce approximations
// that are certified afterwards.
struct CF {
    BigFloat re;
    BigFloat im;
    explicit CF(mpfr_prec_t p) : re(p), im(p) {}
};

CF cf_from(mpfr_prec_t p, const GaussQ& q) {
    CF z(p);
    mpfr_set_q(z.re.get(), q.re().get_mpq_t(), MPFR_RNDN);
    mpfr_set_q(z.im.get(), q.im().get_mpq_t(), MPFR_RNDN);
    return z;
}

CF cf_add(const CF& a, const CF& b) {
    CF z(a.re.prec());
    mpfr_add(z.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(z.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    return z;
}

CF cf_sub(const CF& a, const CF& b) {
    CF z(a.re.prec());
    mpfr_sub(z.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_sub(z.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    return z;
}

CF cf_mul(const CF& a, const CF& b) {
    CF z(a.re.prec());
    mpfr_fmms(z.re.get(), a.re.get(), b.re.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_fmma(z.im.get(), a.re.get(), b.im.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    return z;
}

// Returns nullopt when b is zero.
std::optional<CF> cf_div(const CF& a, const CF& b) {
    const mpfr_prec_t p = a.re.prec();
    BigFloat d(p + 16), t(p + 16);
    mpfr_sqr(d.get(), b.re.get(), MPFR_RNDN);
    mpfr_fma(d.get(), b.im.get(), b.im.get(), d.get(), MPFR_RNDN);
    if (mpfr_zero_p(d.get())) return std::nullopt;
    CF z(p);
    mpfr_fmma(t.get(), a.re.get(), b.re.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_div(z.re.get(), t.get(), d.get(), MPFR_RNDN);
    mpfr_fmms(t.get(), a.im.get(), b.re.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_div(z.im.get(), t.get(), d.get(), MPFR_RNDN);
    return z;
}

// log2 |a|, robust for values outside the double range.
double cf_log2_abs(const CF& a) {
    const double lr = mpfr_zero_p(a.re.get()) ? -1e300 : static_cast<double>(mpfr_get_exp(a.re.get()));
    const double li = mpfr_zero_p(a.im.get()) ? -1e300 : static_cast<double>(mpfr_get_exp(a.im.get()));
    return std::max(lr, li);
}

// p(z) and p'(z) by Horner's rule.
std::pair<CF, CF> horner(const std::vector<CF>& c, const CF& z) {
    const mpfr_prec_t p = z.re.prec();
    CF f = c.back();
    CF d(p);
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        d = cf_add(cf_mul(d, z), f);
        f = cf_add(cf_mul(f, z), c[k]);
    }
    return {f, d};
}

// Simultaneous approximation of all roots of a monic polynomial (Aberth-Ehrlich).
std::vector<CF> aberth(const Poly& monic, mpfr_prec_t prec) {
    const std::size_t n = static_cast<std::size_t>(monic.degree());
    std::vector<CF> c;
    c.reserve(n + 1);
    for (const auto& q : monic.coeffs()) c.push_back(cf_from(prec, q));

    double radius = std::pow(std::sqrt(monic.coeff(0).norm().get_d()), 1.0 / static_cast<double>(n));
    if (!std::isfinite(radius) || radius <= 0) radius = 1.0;
    std::vector<CF> z;
    for (std::size_t k = 0; k < n; ++k) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.7;
        CF w(prec);
        mpfr_set_d(w.re.get(), radius * std::cos(angle), MPFR_RNDN);
        mpfr_set_d(w.im.get(), radius * std::sin(angle), MPFR_RNDN);
        z.push_back(std::move(w));
    }

    const double target = -static_cast<double>(prec) + 6.0;
    const std::size_t max_iter = 200 + 40 * n + static_cast<std::size_t>(prec);
    for (std::size_t iter = 0; iter < max_iter; ++iter) {
        bool converged = true;
        for (std::size_t i = 0; i < n; ++i) {
            auto [f, d] = horner(c, z[i]);
            if (mpfr_zero_p(f.re.get()) && mpfr_zero_p(f.im.get())) continue;
            auto ratio = cf_div(f, d);
            if (!ratio) {
                mpfr_mul_d(z[i].re.get(), z[i].re.get(), 1.0 + 1e-3, MPFR_RNDN);
                converged = false;
                continue;
            }
            CF sum(prec);
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                if (auto inv = cf_div(cf_from(prec, GaussQ(1)), cf_sub(z[i], z[j]))) sum = cf_add(sum, *inv);
            }
            CF denom = cf_sub(cf_from(prec, GaussQ(1)), cf_mul(*ratio, sum));
            auto step = cf_div(*ratio, denom);
            const CF& w = step ? *step : *ratio;
            const double scale = std::max(0.0, cf_log2_abs(z[i]));
            if (cf_log2_abs(w) > target + scale) converged = false;
            z[i] = cf_sub(z[i], w);
        }
        if (converged) break;
    }
    return z;
}

// Continued-fraction convergents of x with denominator at most max_den (the last two).
std::vector<mpq_class> convergents(const mpq_class& x, const mpz_class& max_den) {
    std::vector<mpq_class> out;
    mpz_class num = x.get_num(), den = x.get_den();
    mpz_class hm2 = 0, hm1 = 1, km2 = 1, km1 = 0;
    while (den != 0) {
        mpz_class a;
        mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        const mpz_class hn = a * hm1 + hm2;
        const mpz_class kn = a * km1 + km2;
        if (kn > max_den) break;
        out.emplace_back(hn, kn);
        hm2 = hm1;
        hm1 = hn;
        km2 = km1;
        km1 = kn;
        const mpz_class r = num - a * den;
        num = den;
        den = r;
    }
    for (auto& q : out) q.canonicalize();
    if (out.size() > 2) out.erase(out.begin(), out.end() - 2);
    return out;
}

mpq_class to_mpq(const BigFloat& f) {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), f.get());
    return q;
}

// Bound on denominators of the components of Gaussian-rational roots of p.
mpz_class denominator_bound(const Poly& p) {
    mpz_class l = 1;
    for (const auto& c : p.coeffs()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re().get_den_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.im().get_den_mpz_t());
    }
    const GaussQ lead = p.lead() * GaussQ(mpq_class(l));
    mpq_class nrm = lead.norm();
    return nrm.get_num();
}

Ball exact_ball(const CF& z) {
    BigFloat rad(53);
    return Ball(z.re, z.im, rad);
}

// Weierstrass-disk certification for the roots of a squarefree monic polynomial.
std::vector<Ball> certify(const Poly& monic, const std::vector<CF>& z) {
    const std::size_t n = z.size();
    std::vector<Ball> mids;
    for (const auto& w : z) mids.push_back(exact_ball(w));
    std::vector<Ball> disks;
    for (std::size_t i = 0; i < n; ++i) {
        Num num = monic(Num(mids[i]));
        Num den(1);
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) den *= Num(mids[i] - mids[j]);
        if (den.is_zero() != Tri::no) throw PrecisionExhausted("root isolation: coincident approximations");
        const Ball w = (num / den).ball();
        BigFloat r = w.abs_upper_big();
        mpfr_mul_ui(r.get(), r.get(), static_cast<unsigned long>(n), MPFR_RNDU);
        disks.emplace_back(mids[i].mid_re(), mids[i].mid_im(), std::move(r));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (disks[i].overlaps(disks[j])) throw PrecisionExhausted("root isolation: inclusion disks overlap");
    return disks;
}

std::vector<Root> squarefree_roots(const Poly& sqfree, mpfr_prec_t prec) {
    Poly g = sqfree.monic();
    std::vector<Root> out;
    if (g.degree() == 1) {
        out.emplace_back(-g.coeff(0));
        return out;
    }
    const mpz_class bound_alg = denominator_bound(g);
    mpz_class bound_prec;
    mpz_ui_pow_ui(bound_prec.get_mpz_t(), 2, static_cast<unsigned long>(std::max<long>(8, (prec - 16) / 2)));
    const mpz_class max_den = std::min(bound_alg, bound_prec);

    const std::vector<CF> approx = aberth(g, prec);
    for (const auto& z : approx) {
        if (g.degree() < 1) break;
        const auto re_c = convergents(to_mpq(z.re), max_den);
        const auto im_c = convergents(to_mpq(z.im), max_den);
        bool found = false;
        for (const auto& a : re_c) {
            for (const auto& b : im_c) {
                const GaussQ c(a, b);
                if (!g(c).is_zero()) continue;
                out.emplace_back(c);
                g = g.divmod(Poly{-c, GaussQ(1)}).first;
                found = true;
                break;
            }
            if (found) break;
        }
    }
    if (g.degree() == 1) {
        out.emplace_back(-g.coeff(0));
        return out;
    }
    if (g.degree() < 1) return out;

    const std::vector<CF> rest = aberth(g, prec);
    const std::vector<Ball> disks = certify(g, rest);
    for (const auto& d : disks) out.emplace_back(std::make_shared<const AlgebraicRoot>(AlgebraicRoot{g, d}));
    return out;
}

// Enclosure of `inner` lies within `outer`.
bool ball_within(const Ball& inner, const Ball& outer) {
    const Ball centre(outer.mid_re(), outer.mid_im(), BigFloat(53));
    const Ball diff = inner - centre;
    BigFloat reach = diff.abs_upper_big();
    return mpfr_cmp(reach.get(), outer.rad().get()) < 0;
}

}  // namespace

bool Root::inside_unit_disk() const {
    if (is_exact()) return exact_.norm() < 1;
    return alg_->enclosure.inside_unit_disk();
}

double Root::modulus_estimate() const {
    if (is_exact()) return std::sqrt(exact_.norm().get_d());
    return std::hypot(alg_->enclosure.mid_re().to_double(), alg_->enclosure.mid_im().to_double());
}

bool same_root(const Root& a, const Root& b) {
    if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
    if (a.is_exact() != b.is_exact()) {
        const Root& e = a.is_exact() ? a : b;
        const AlgebraicRoot& r = a.is_exact() ? b.algebraic() : a.algebraic();
        if (!r.poly(e.exact()).is_zero()) return false;
        const Ball pt(e.exact(), r.enclosure.prec());
        if (ball_within(pt, r.enclosure)) return true;
        if (!pt.overlaps(r.enclosure)) return false;
        throw PrecisionExhausted("root comparison: enclosure touches a rational root");
    }
    const AlgebraicRoot& ra = a.algebraic();
    const AlgebraicRoot& rb = b.algebraic();
    if (&ra == &rb) return true;
    if (!ra.enclosure.overlaps(rb.enclosure)) return false;
    const Poly g = gcd(ra.poly, rb.poly);
    if (g.degree() < 1) return false;
    const mpfr_prec_t prec = std::max(ra.enclosure.prec(), rb.enclosure.prec());
    for (const auto& rm : nonzero_roots(g, prec, false)) {
        const Ball enc = rm.root.is_exact() ? Ball(rm.root.exact(), prec) : rm.root.algebraic().enclosure;
        const bool in_a = ball_within(enc, ra.enclosure);
        const bool in_b = ball_within(enc, rb.enclosure);
        if (in_a && in_b) return true;
        if (in_a && !enc.overlaps(rb.enclosure)) return false;
        if (in_b && !enc.overlaps(ra.enclosure)) return false;
        if (enc.overlaps(ra.enclosure) || enc.overlaps(rb.enclosure))
            throw PrecisionExhausted("root comparison: enclosures cannot be separated");
    }
    return false;
}

std::vector<RootMultiplicity> nonzero_roots(const Poly& p, mpfr_prec_t prec, bool separate_circle) {
    if (p.is_zero()) throw ZeroSymbol("nonzero_roots: zero polynomial");
    const Poly q = p.strip_zero_roots();
    std::vector<RootMultiplicity> out;
    if (q.degree() < 1) return out;
    for (const auto& [factor, mult] : squarefree_decomposition(q)) {
        for (auto& r : squarefree_roots(factor, prec)) {
            if (separate_circle && !r.is_exact()) {
                const Ball& e = r.algebraic().enclosure;
                if (!e.inside_unit_disk() && !e.outside_unit_disk())
                    throw PrecisionExhausted("root isolation: enclosure meets the unit circle");
            }
            out.push_back({std::move(r), mult});
        }
    }
    return out;
}

}  // namespace browder
