#include "browder/op/bet_operator.hpp"

#include "browder/error.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace browder {

namespace {

long binomial(long n, long k) {
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Num eval_poly(const std::vector<Num>& poly, const Num& n) {
    Num acc(0);
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * n + *it;
    return acc;
}

void add_at(std::vector<Num>& head, std::size_t n, const Num& v) {
    if (v.is_exact_zero()) return;
    if (head.size() <= n) head.resize(n + 1);
    head[n] += v;
}

// T(p) applied to one scalar sequence.
Sequence toeplitz_sequence(const LaurentSymbol& p, const Sequence& s) {
    Sequence out;
    if (p.is_zero()) return out;
    const long lo = p.low();
    const long hi = p.high();
    const long len = static_cast<long>(s.head.size());
    for (long n = 0; n < len + hi; ++n)
        for (long j = lo; j <= hi; ++j) {
            const long m = n - j;
            if (m < 0 || m >= len || s.head[static_cast<std::size_t>(m)].is_exact_zero()) continue;
            add_at(out.head, static_cast<std::size_t>(n), Num(p.coeff(j)) * s.head[static_cast<std::size_t>(m)]);
        }
    for (const auto& t : s.tails) {
        const Num rho = t.root.value();
        const std::size_t deg = t.poly.size();
        // For n >= hi the image is rho^n * q~(n) with q~(n) = sum_j p_j rho^-j q(n - j).
        std::vector<Num> q_new(deg);
        for (long j = lo; j <= hi; ++j) {
            const GaussQ pj = p.coeff(j);
            if (pj.is_zero()) continue;
            const Num w = Num(pj) * pow(rho, -j);
            for (std::size_t i = 0; i < deg; ++i) {
                Num acc(0);
                for (std::size_t k = i; k < deg; ++k)
                    acc += t.poly[k] * Num(binomial(static_cast<long>(k), static_cast<long>(i))) *
                           Num(pow(GaussQ(-j), static_cast<long>(k - i)));
                q_new[i] += w * acc;
            }
        }
        // Below hi the terms with n - j < 0 are absent.
        for (long n = 0; n < hi; ++n) {
            Num corr(0);
            for (long j = std::max(n + 1, lo); j <= hi; ++j) {
                const GaussQ pj = p.coeff(j);
                if (pj.is_zero()) continue;
                corr += Num(pj) * eval_poly(t.poly, Num(n - j)) * pow(rho, n - j);
            }
            add_at(out.head, static_cast<std::size_t>(n), -corr);
        }
        out.tails.push_back(Tail{t.root, std::move(q_new)});
    }
    return out;
}

bool is_finite_term(const RankOne& t) { return !t.u.has_tails() && !t.v.has_tails(); }

}  // namespace

BetOperator::BetOperator(MatrixSymbol symbol, std::vector<RankOne> perturbation)
    : symbol_(std::move(symbol)), terms_(std::move(perturbation)) {
    for (const auto& t : terms_)
        if (t.u.dim() != dim() || t.v.dim() != dim())
            throw DimensionMismatch("BetOperator: perturbation factor dimension differs from the symbol");
}

BetOperator BetOperator::rank_one(ExpPolyVector u, ExpPolyVector v) {
    const std::size_t d = u.dim();
    return BetOperator(MatrixSymbol(d), {RankOne{std::move(u), std::move(v)}});
}

ExpPolyVector apply_toeplitz(const MatrixSymbol& p, const ExpPolyVector& x) {
    if (x.dim() != p.dim()) throw DimensionMismatch("apply: vector dimension differs from the symbol");
    ExpPolyVector y(p.dim());
    for (std::size_t a = 0; a < p.dim(); ++a) {
        Sequence acc;
        for (std::size_t b = 0; b < p.dim(); ++b) {
            Sequence part = toeplitz_sequence(p(a, b), x.comp(b));
            if (acc.head.size() < part.head.size()) acc.head.resize(part.head.size());
            for (std::size_t n = 0; n < part.head.size(); ++n) acc.head[n] += part.head[n];
            for (auto& t : part.tails) acc.tails.push_back(std::move(t));
        }
        y.comp(a) = std::move(acc);
    }
    return y.normalized();
}

ExpPolyVector BetOperator::apply(const ExpPolyVector& x) const {
    ExpPolyVector y = apply_toeplitz(symbol_, x);
    for (const auto& t : terms_) {
        const Num c = inner(x, t.v);
        if (!c.is_exact_zero()) y = y + c * t.u;
    }
    return y;
}

Num BetOperator::entry(std::size_t row_comp, std::size_t row, std::size_t col_comp, std::size_t col) const {
    Num v(symbol_(row_comp, col_comp).coeff(static_cast<long>(row) - static_cast<long>(col)));
    for (const auto& t : terms_) v += t.u.at(row_comp, row) * t.v.at(col_comp, col).conj();
    return v;
}

linalg::NumMatrix BetOperator::window(std::size_t n) const {
    const std::size_t d = dim();
    linalg::NumMatrix w(d * n, d * n);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t b = 0; b < d; ++b)
                for (std::size_t j = 0; j < n; ++j) w(a * n + i, b * n + j) = entry(a, i, b, j);
    return w;
}

bool BetOperator::has_tails() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const RankOne& t) { return t.u.has_tails() || t.v.has_tails(); });
}

std::vector<RankOne> normalize_terms(const std::vector<RankOne>& terms, std::size_t dim) {
    // Finitely supported part as a dense map (row comp, row) x (col comp, col) -> value.
    std::map<std::pair<std::size_t, std::size_t>, std::map<std::pair<std::size_t, std::size_t>, Num>> dense;
    std::vector<RankOne> tailed;
    for (const auto& t : terms) {
        RankOne n{t.u.normalized(), t.v.normalized()};
        if (n.u.is_zero() == Tri::yes || n.v.is_zero() == Tri::yes) continue;
        if (!is_finite_term(n)) {
            tailed.push_back(std::move(n));
            continue;
        }
        for (std::size_t a = 0; a < dim; ++a)
            for (std::size_t i = 0; i < n.u.comp(a).head.size(); ++i) {
                const Num& ua = n.u.comp(a).head[i];
                if (ua.is_exact_zero()) continue;
                for (std::size_t b = 0; b < dim; ++b)
                    for (std::size_t j = 0; j < n.v.comp(b).head.size(); ++j) {
                        const Num& vb = n.v.comp(b).head[j];
                        if (vb.is_exact_zero()) continue;
                        dense[{a, i}][{b, j}] += ua * vb.conj();
                    }
            }
    }

    std::vector<RankOne> out;
    // Column decomposition F = sum_c F[:, c] (x) e_c, or row decomposition if it is shorter.
    std::map<std::pair<std::size_t, std::size_t>, std::map<std::pair<std::size_t, std::size_t>, Num>> by_col;
    std::size_t nonzero_rows = 0;
    for (const auto& [r, row] : dense) {
        bool any = false;
        for (const auto& [c, v] : row) {
            if (v.is_exact_zero()) continue;
            by_col[c][r] = v;
            any = true;
        }
        if (any) ++nonzero_rows;
    }
    if (by_col.size() <= nonzero_rows) {
        for (const auto& [c, col] : by_col) {
            ExpPolyVector u(dim);
            for (const auto& [r, v] : col) {
                auto& h = u.comp(r.first).head;
                if (h.size() <= r.second) h.resize(r.second + 1);
                h[r.second] = v;
            }
            out.push_back(RankOne{std::move(u), ExpPolyVector::unit(c.second, c.first, dim)});
        }
    } else {
        for (const auto& [r, row] : dense) {
            ExpPolyVector v(dim);
            bool any = false;
            for (const auto& [c, x] : row) {
                if (x.is_exact_zero()) continue;
                auto& h = v.comp(c.first).head;
                if (h.size() <= c.second) h.resize(c.second + 1);
                h[c.second] = x.conj();
                any = true;
            }
            if (any) out.push_back(RankOne{ExpPolyVector::unit(r.second, r.first, dim), std::move(v)});
        }
    }

    // Tail terms: merge equal right factors, then equal left factors.
    std::vector<RankOne> merged;
    for (auto& t : tailed) {
        auto it = std::find_if(merged.begin(), merged.end(), [&](const RankOne& m) { return m.v.same_as(t.v); });
        if (it != merged.end())
            it->u = it->u + t.u;
        else
            merged.push_back(std::move(t));
    }
    std::vector<RankOne> merged2;
    for (auto& t : merged) {
        if (t.u.is_zero() == Tri::yes) continue;
        auto it = std::find_if(merged2.begin(), merged2.end(), [&](const RankOne& m) { return m.u.same_as(t.u); });
        if (it != merged2.end())
            it->v = it->v + t.v;
        else
            merged2.push_back(std::move(t));
    }
    for (auto& t : merged2)
        if (t.v.is_zero() != Tri::yes) out.push_back(std::move(t));
    return out;
}

BetOperator bet_add(const BetOperator& s, const BetOperator& t) {
    if (s.dim() != t.dim()) throw DimensionMismatch("bet_add: symbol dimensions differ");
    std::vector<RankOne> terms = s.perturbation();
    terms.insert(terms.end(), t.perturbation().begin(), t.perturbation().end());
    return BetOperator(s.symbol() + t.symbol(), normalize_terms(terms, s.dim()));
}

BetOperator bet_scale(const Num& c, const BetOperator& t) {
    MatrixSymbol sym(t.dim());
    if (!c.is_exact()) throw PrecisionExhausted("bet_scale: symbol coefficients must stay exact");
    for (std::size_t a = 0; a < t.dim(); ++a)
        for (std::size_t b = 0; b < t.dim(); ++b) sym(a, b) = LaurentSymbol(c.exact()) * t.symbol()(a, b);
    std::vector<RankOne> terms;
    for (const auto& r : t.perturbation()) terms.push_back(RankOne{c * r.u, r.v});
    return BetOperator(std::move(sym), normalize_terms(terms, t.dim()));
}

BetOperator bet_sub(const BetOperator& s, const BetOperator& t) { return bet_add(s, bet_scale(Num(-1), t)); }

BetOperator bet_compose(const BetOperator& s, const BetOperator& t) {
    if (s.dim() != t.dim()) throw DimensionMismatch("bet_compose: symbol dimensions differ");
    const std::size_t d = s.dim();
    const MatrixSymbol& p = s.symbol();
    const MatrixSymbol& q = t.symbol();
    std::vector<RankOne> terms;

    // T(P)T(Q) - T(PQ): entries (a, j; b, k) = -sum_{l<0} sum_c P_ac(j - l) Q_cb(l - k),
    // supported in j < high(P), k < -low(Q).
    const long hi_p = p.is_zero() ? 0 : p.high();
    const long lo_q = q.is_zero() ? 0 : q.low();
    for (std::size_t b = 0; b < d; ++b)
        for (long k = 0; k < -lo_q; ++k) {
            ExpPolyVector u(d);
            bool any = false;
            for (std::size_t a = 0; a < d; ++a)
                for (long j = 0; j < hi_p; ++j) {
                    GaussQ e;
                    for (long l = std::min(-1L, j - p.low()); l >= j - hi_p && l >= lo_q + k; --l)
                        for (std::size_t c = 0; c < d; ++c) e -= p(a, c).coeff(j - l) * q(c, b).coeff(l - k);
                    if (e.is_zero()) continue;
                    auto& h = u.comp(a).head;
                    if (h.size() <= static_cast<std::size_t>(j)) h.resize(static_cast<std::size_t>(j) + 1);
                    h[static_cast<std::size_t>(j)] = Num(e);
                    any = true;
                }
            if (any) terms.push_back(RankOne{std::move(u), ExpPolyVector::unit(static_cast<std::size_t>(k), b, d)});
        }

    // (T(P) + sum a_i (x) b_i)(c_k (x) d_k) = (T(P) c_k + sum_i <c_k, b_i> a_i) (x) d_k
    for (const auto& ct : t.perturbation()) {
        ExpPolyVector u = apply_toeplitz(p, ct.u);
        for (const auto& st : s.perturbation()) {
            const Num w = inner(ct.u, st.v);
            if (!w.is_exact_zero()) u = u + w * st.u;
        }
        terms.push_back(RankOne{std::move(u), ct.v});
    }
    // (a_i (x) b_i) T(Q) = a_i (x) T(Q)* b_i
    const MatrixSymbol q_adj = q.adjoint();
    for (const auto& st : s.perturbation()) terms.push_back(RankOne{st.u, apply_toeplitz(q_adj, st.v)});

    return BetOperator(p * q, normalize_terms(terms, d));
}

BetOperator bet_adjoint(const BetOperator& t) {
    std::vector<RankOne> terms;
    for (const auto& r : t.perturbation()) terms.push_back(RankOne{r.v, r.u});
    return BetOperator(t.symbol().adjoint(), std::move(terms));
}

BetOperator bet_power(const BetOperator& t, std::size_t k) {
    BetOperator out = BetOperator::identity(t.dim());
    for (std::size_t i = 0; i < k; ++i) out = bet_compose(out, t);
    return out;
}

BetOperator translate(const BetOperator& t, const GaussQ& lambda) {
    return BetOperator(t.symbol().translate(lambda), t.perturbation());
}

BetOperator assemble_MC(const BetOperator& a, const BetOperator& b, const BetOperator& c) {
    if (a.dim() != 1 || b.dim() != 1 || c.dim() != 1)
        throw DimensionMismatch("assemble_MC: A, B and C must act on a single copy of l2");
    MatrixSymbol sym = MatrixSymbol::upper_triangular(a.symbol()(0, 0), c.symbol()(0, 0), b.symbol()(0, 0));
    std::vector<RankOne> terms;
    for (const auto& r : a.perturbation()) terms.push_back(RankOne{r.u.embed(0, 2), r.v.embed(0, 2)});
    for (const auto& r : c.perturbation()) terms.push_back(RankOne{r.u.embed(0, 2), r.v.embed(1, 2)});
    for (const auto& r : b.perturbation()) terms.push_back(RankOne{r.u.embed(1, 2), r.v.embed(1, 2)});
    return BetOperator(std::move(sym), std::move(terms));
}

}  // namespace browder
