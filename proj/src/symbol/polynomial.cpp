#include "browder/symbol/polynomial.hpp"

#include "browder/error.hpp"

#include <algorithm>

namespace browder {

Poly::Poly(std::vector<GaussQ> ascending) : coeffs_(std::move(ascending)) { trim(); }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::monomial(GaussQ c, std::size_t degree) {
    std::vector<GaussQ> v(degree + 1);
    v[degree] = std::move(c);
    return Poly(std::move(v));
}

GaussQ Poly::operator()(const GaussQ& z) const {
    GaussQ acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Num Poly::operator()(const Num& z) const {
    Num acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + Num(*it);
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<GaussQ> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * GaussQ(static_cast<long>(k));
    return Poly(std::move(d));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    const GaussQ inv = GaussQ(1) / lead();
    std::vector<GaussQ> c = coeffs_;
    for (auto& x : c) x *= inv;
    return Poly(std::move(c));
}

Poly Poly::reciprocal_conj() const {
    std::vector<GaussQ> c(coeffs_.rbegin(), coeffs_.rend());
    for (auto& x : c) x = x.conj();
    return Poly(std::move(c));
}

Poly Poly::conj_coeffs() const {
    std::vector<GaussQ> c = coeffs_;
    for (auto& x : c) x = x.conj();
    return Poly(std::move(c));
}

std::size_t Poly::zero_root_multiplicity() const {
    std::size_t k = 0;
    while (k < coeffs_.size() && coeffs_[k].is_zero()) ++k;
    return k;
}

Poly Poly::strip_zero_roots() const {
    const std::size_t k = zero_root_multiplicity();
    return Poly(std::vector<GaussQ>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<GaussQ> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<GaussQ> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] -= b.coeffs_[k];
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<GaussQ> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(c));
}

Poly operator*(const GaussQ& s, const Poly& p) {
    std::vector<GaussQ> c = p.coeffs_;
    for (auto& x : c) x *= s;
    return Poly(std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw Error("Poly::divmod: division by the zero polynomial");
    if (degree() < d.degree()) return {Poly(), *this};
    std::vector<GaussQ> r = coeffs_;
    std::vector<GaussQ> q(coeffs_.size() - d.coeffs_.size() + 1);
    const GaussQ inv = GaussQ(1) / d.lead();
    const std::size_t dd = d.coeffs_.size() - 1;
    for (std::size_t k = q.size(); k-- > 0;) {
        const GaussQ f = r[k + dd] * inv;
        q[k] = f;
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j <= dd; ++j) r[k + j] -= f * d.coeffs_[j];
    }
    r.resize(dd);
    return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

std::vector<std::pair<Poly, std::size_t>> squarefree_decomposition(const Poly& p) {
    // Yun's algorithm (characteristic zero).
    std::vector<std::pair<Poly, std::size_t>> out;
    if (p.degree() < 1) return out;
    Poly a = p.monic();
    Poly b = a.derivative();
    Poly c = gcd(a, b);
    Poly w = a.divmod(c).first;
    Poly y = b.divmod(c).first;
    Poly z = y - w.derivative();
    std::size_t k = 1;
    while (w.degree() >= 1) {
        Poly g = gcd(w, z);
        if (g.degree() >= 1) out.emplace_back(g, k);
        w = w.divmod(g).first;
        y = z.divmod(g).first;
        z = y - w.derivative();
        ++k;
    }
    return out;
}

namespace {

using QPoly = std::vector<mpq_class>;

void qtrim(QPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

QPoly qrem(QPoly a, const QPoly& d) {
    qtrim(a);
    const std::size_t dd = d.size() - 1;
    while (a.size() >= d.size()) {
        const mpq_class f = a.back() / d.back();
        const std::size_t shift = a.size() - d.size();
        for (std::size_t j = 0; j <= dd; ++j) a[shift + j] -= f * d[j];
        a.pop_back();
        qtrim(a);
    }
    return a;
}

QPoly qgcd(QPoly a, QPoly b) {
    qtrim(a);
    qtrim(b);
    while (!b.empty()) {
        QPoly r = qrem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

QPoly qderivative(const QPoly& p) {
    QPoly d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
    qtrim(d);
    return d;
}

int sign_at_plus_inf(const QPoly& p) { return p.empty() ? 0 : sgn(p.back()); }

int sign_at_minus_inf(const QPoly& p) {
    if (p.empty()) return 0;
    const int s = sgn(p.back());
    return (p.size() - 1) % 2 == 0 ? s : -s;
}

std::size_t sign_changes(const std::vector<int>& signs) {
    std::size_t changes = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

std::size_t count_real_roots(const std::vector<mpq_class>& ascending) {
    QPoly p = ascending;
    qtrim(p);
    if (p.size() <= 1) return 0;
    // Squarefree part so that the Sturm chain counts distinct roots.
    QPoly g = qgcd(p, qderivative(p));
    if (g.size() > 1) {
        // p / g by long division.
        QPoly q(p.size() - g.size() + 1);
        QPoly r = p;
        for (std::size_t k = q.size(); k-- > 0;) {
            q[k] = r[k + g.size() - 1] / g.back();
            for (std::size_t j = 0; j < g.size(); ++j) r[k + j] -= q[k] * g[j];
        }
        p = q;
        qtrim(p);
    }
    std::vector<QPoly> chain{p, qderivative(p)};
    while (!chain.back().empty()) {
        QPoly r = qrem(chain[chain.size() - 2], chain.back());
        for (auto& c : r) c = -c;
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    std::vector<int> at_minus, at_plus;
    for (const auto& q : chain) {
        at_minus.push_back(sign_at_minus_inf(q));
        at_plus.push_back(sign_at_plus_inf(q));
    }
    return sign_changes(at_minus) - sign_changes(at_plus);
}

bool has_unit_circle_root(const Poly& p) {
    if (p.is_zero()) throw ZeroSymbol("has_unit_circle_root: zero polynomial");
    const Poly q = p.strip_zero_roots();
    if (q.degree() < 1) return false;
    // Roots invariant under z -> 1/conj(z), including every circle root.
    const Poly g = gcd(q, q.reciprocal_conj());
    if (g.degree() < 1) return false;
    if (g(GaussQ(-1)).is_zero()) return true;
    // z = (1 + i t) / (1 - i t) maps the real line onto the circle minus {-1}.
    const long d = g.degree();
    const Poly one_plus{GaussQ(1), GaussQ(0, 1)};
    const Poly one_minus{GaussQ(1), GaussQ(0, -1)};
    std::vector<Poly> plus_pow{Poly{GaussQ(1)}}, minus_pow{Poly{GaussQ(1)}};
    for (long k = 1; k <= d; ++k) {
        plus_pow.push_back(plus_pow.back() * one_plus);
        minus_pow.push_back(minus_pow.back() * one_minus);
    }
    Poly h;
    for (long k = 0; k <= d; ++k) h = h + g.coeff(static_cast<std::size_t>(k)) * (plus_pow[k] * minus_pow[d - k]);
    std::vector<mpq_class> re, im;
    for (const auto& c : h.coeffs()) {
        re.push_back(c.re());
        im.push_back(c.im());
    }
    const QPoly common = qgcd(re, im);
    return count_real_roots(common) > 0;
}

namespace {

// Disk automorphism w -> (w + a) / (1 + conj(a) w) applied to p, scaled by (1 + conj(a) w)^n.
Poly disk_automorphism(const Poly& p, const GaussQ& a) {
    const long n = p.degree();
    const Poly num{a, GaussQ(1)};
    const Poly den{GaussQ(1), a.conj()};
    std::vector<Poly> num_pow{Poly{GaussQ(1)}}, den_pow{Poly{GaussQ(1)}};
    for (long k = 1; k <= n; ++k) {
        num_pow.push_back(num_pow.back() * num);
        den_pow.push_back(den_pow.back() * den);
    }
    Poly out;
    for (long k = 0; k <= n; ++k) out = out + p.coeff(static_cast<std::size_t>(k)) * (num_pow[k] * den_pow[n - k]);
    return out;
}

const std::vector<GaussQ>& automorphism_candidates() {
    static const std::vector<GaussQ> candidates = [] {
        std::vector<GaussQ> c;
        for (long den = 2; den <= 9; ++den)
            for (long re = -den + 1; re < den; ++re)
                for (long im = -den + 1; im < den; ++im) {
                    if (re == 0 && im == 0) continue;
                    if (re * re + im * im >= den * den) continue;
                    c.emplace_back(mpq_class(re, den), mpq_class(im, den));
                }
        return c;
    }();
    return candidates;
}

std::size_t schur_cohn(Poly p, int depth) {
    if (depth > 4096) throw Error("schur_cohn: recursion limit");
    std::size_t zeros = p.zero_root_multiplicity();
    p = p.strip_zero_roots();
    const long n = p.degree();
    if (n <= 0) return zeros;
    const GaussQ& a0 = p.coeff(0);
    const GaussQ& an = p.lead();
    const mpq_class delta = a0.norm() - an.norm();
    if (sgn(delta) != 0) {
        const Poly t = a0.conj() * p - an * p.reciprocal_conj();
        const std::size_t inner = schur_cohn(t, depth + 1);
        return zeros + (sgn(delta) > 0 ? inner : static_cast<std::size_t>(n) - inner);
    }
    const Poly t = a0.conj() * p - an * p.reciprocal_conj();
    if (t.is_zero()) {
        // Self-inversive with no circle roots: roots pair off as (r, 1/conj r).
        return zeros + static_cast<std::size_t>(n) / 2;
    }
    for (const GaussQ& a : automorphism_candidates()) {
        Poly q = disk_automorphism(p, a);
        const mpq_class d = q.coeff(0).norm() - q.lead().norm();
        if (q.zero_root_multiplicity() == 0 && sgn(d) != 0) return zeros + schur_cohn(std::move(q), depth + 1);
    }
    throw Error("schur_cohn: no nondegenerate disk automorphism found");
}

}  // namespace

std::size_t count_roots_in_unit_disk(const Poly& p) {
    if (p.is_zero()) throw ZeroSymbol("count_roots_in_unit_disk: zero polynomial");
    if (has_unit_circle_root(p)) throw CircleZero("count_roots_in_unit_disk: root on the unit circle");
    return schur_cohn(p, 0);
}

}  // namespace browder
