#include "browder/fredholm/fredholm.hpp"

#include "browder/error.hpp"
#include "browder/linalg/certified_elimination.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace browder {

std::string ExtNat::to_string() const {
    switch (kind_) {
        case Kind::finite: return std::to_string(value_);
        case Kind::infinite: return "inf";
        case Kind::exceeds_cap: return "exceeds_cap(" + std::to_string(value_) + ")";
    }
    return "?";
}

ExtNat operator+(const ExtNat& a, const ExtNat& b) {
    if (a.is_infinite() || b.is_infinite()) return ExtNat::infinite();
    if (a.is_exceeds_cap()) return a;
    if (b.is_exceeds_cap()) return b;
    return ExtNat::finite(a.value() + b.value());
}

Tri ext_equal(const ExtNat& a, const ExtNat& b) {
    if (a.is_exceeds_cap() || b.is_exceeds_cap()) return Tri::undecided;
    return tri(a == b);
}

Tri ext_finite(const ExtNat& a) {
    if (a.is_exceeds_cap()) return Tri::undecided;
    return tri(a.is_finite());
}

namespace {

struct AnsatzRoot {
    Root root;
    std::size_t det_mult = 0;
    long u_degree = -1;
    std::size_t count() const { return det_mult + (u_degree >= 0 ? static_cast<std::size_t>(u_degree) + 1 : 0); }
};

struct Attempt {
    std::size_t alpha_lo = 0;
    std::size_t alpha_hi = 0;
    std::vector<ExpPolyVector> basis;
};

std::size_t find_root(const std::vector<AnsatzRoot>& roots, const Root& r) {
    for (std::size_t i = 0; i < roots.size(); ++i)
        if (same_root(roots[i].root, r)) return i;
    return roots.size();
}

// Kernel vectors are head + exponential-polynomial tails over the decaying characteristic roots
// and the tail roots of the perturbation's left factors. Applying T to every ansatz unknown and
// requiring the image to vanish gives a finite linear system.
//
// With a nonempty rhs the system is T x = sum c_i rhs_i instead; when rhs is a basis of N(T^k)
// the x-parts of its solutions form a basis of N(T^(k+1)).
Attempt kernel_attempt(const BetOperator& t, mpfr_prec_t prec, const std::vector<ExpPolyVector>& rhs = {}) {
    const std::size_t d = t.dim();
    const MatrixSymbol& sym = t.symbol();
    const LaurentSymbol det = det_symbol(sym);
    const long lo = sym.low();
    const long hi = sym.high();

    std::vector<AnsatzRoot> roots;
    {
        std::vector<GaussQ> rev(det.coeffs().rbegin(), det.coeffs().rend());
        for (auto& rm : nonzero_roots(Poly(std::move(rev)), prec, true))
            if (rm.root.inside_unit_disk()) roots.push_back(AnsatzRoot{std::move(rm.root), rm.multiplicity, -1});
    }
    std::size_t u_head = 0;
    for (const auto& term : t.perturbation()) {
        u_head = std::max(u_head, term.u.head_length());
        for (std::size_t c = 0; c < d; ++c)
            for (const auto& tail : term.u.comp(c).tails) {
                std::size_t i = find_root(roots, tail.root);
                if (i == roots.size()) roots.push_back(AnsatzRoot{tail.root, 0, -1});
                roots[i].u_degree = std::max(roots[i].u_degree, static_cast<long>(tail.poly.size()) - 1);
            }
    }
    for (const auto& y : rhs) {
        u_head = std::max(u_head, y.head_length());
        for (std::size_t c = 0; c < d; ++c)
            for (const auto& tail : y.comp(c).tails) {
                std::size_t i = find_root(roots, tail.root);
                if (i == roots.size()) roots.push_back(AnsatzRoot{tail.root, 0, -1});
                roots[i].u_degree = std::max(roots[i].u_degree, static_cast<long>(tail.poly.size()) - 1);
            }
    }
    std::stable_sort(roots.begin(), roots.end(), [](const AnsatzRoot& a, const AnsatzRoot& b) {
        return a.root.modulus_estimate() < b.root.modulus_estimate();
    });

    const std::size_t width = static_cast<std::size_t>(hi - lo + 1);
    const std::size_t n1 = std::max({static_cast<std::size_t>(std::max(hi, 0L)), static_cast<std::size_t>(std::max(-lo, 0L)),
                                     std::size_t{1}, u_head});
    const std::size_t head_len = n1 + (d + 1) * width + 2;
    const std::size_t value_rows = head_len + static_cast<std::size_t>(std::max(hi, 0L)) + u_head + 2;

    struct Unknown {
        std::size_t comp;
        bool tail;
        std::size_t index;  // head position, or root index
        std::size_t power;
    };
    std::vector<Unknown> unknowns;
    for (std::size_t c = 0; c < d; ++c)
        for (std::size_t n = 0; n < head_len; ++n) unknowns.push_back({c, false, n, 0});
    std::vector<std::size_t> tail_row_offset(roots.size());
    std::size_t tail_rows_per_comp = 0;
    for (std::size_t r = 0; r < roots.size(); ++r) {
        tail_row_offset[r] = tail_rows_per_comp;
        tail_rows_per_comp += roots[r].count();
    }
    for (std::size_t c = 0; c < d; ++c)
        for (std::size_t r = 0; r < roots.size(); ++r)
            for (std::size_t k = 0; k < roots[r].count(); ++k) unknowns.push_back({c, true, r, k});

    auto unknown_vector = [&](const Unknown& u) {
        if (!u.tail) return ExpPolyVector::unit(u.index, u.comp, d);
        ExpPolyVector e(d);
        std::vector<Num> poly(u.power + 1, Num(0));
        poly[u.power] = Num(1);
        e.comp(u.comp).tails.push_back(Tail{roots[u.index].root, std::move(poly)});
        return e;
    };

    const std::size_t rows = d * value_rows + d * tail_rows_per_comp;
    const std::size_t x_unknowns = unknowns.size();
    linalg::NumMatrix m(rows, x_unknowns + rhs.size());
    for (std::size_t j = 0; j < x_unknowns + rhs.size(); ++j) {
        const ExpPolyVector y = j < x_unknowns ? t.apply(unknown_vector(unknowns[j])) : Num(-1) * rhs[j - x_unknowns];
        if (y.head_length() > value_rows) throw std::logic_error("kernel system: image head exceeds the value window");
        for (std::size_t c = 0; c < d; ++c) {
            for (std::size_t n = 0; n < value_rows; ++n) m(c * value_rows + n, j) = y.at(c, n);
            for (const auto& tail : y.comp(c).tails) {
                const std::size_t r = find_root(roots, tail.root);
                if (r == roots.size() || tail.poly.size() > roots[r].count())
                    throw std::logic_error("kernel system: image tail outside the ansatz");
                for (std::size_t k = 0; k < tail.poly.size(); ++k)
                    m(d * value_rows + c * tail_rows_per_comp + tail_row_offset[r] + k, j) = tail.poly[k];
            }
        }
    }

    Attempt out;
    const linalg::CertifiedRank cr = linalg::certified_rank(m);
    out.alpha_lo = m.cols() - cr.rank_hi;
    out.alpha_hi = m.cols() - cr.rank_lo;
    for (const auto& nv : cr.null_basis) {
        ExpPolyVector x(d);
        for (std::size_t j = 0; j < x_unknowns; ++j) {
            if (nv[j].is_exact_zero()) continue;
            const Unknown& u = unknowns[j];
            if (!u.tail) {
                auto& h = x.comp(u.comp).head;
                if (h.size() <= u.index) h.resize(u.index + 1);
                h[u.index] = nv[j];
            } else {
                std::vector<Num> poly(u.power + 1, Num(0));
                poly[u.power] = nv[j];
                x.comp(u.comp).tails.push_back(Tail{roots[u.index].root, std::move(poly)});
            }
        }
        out.basis.push_back(x.normalized());
    }
    return out;
}

void require_fredholm_symbol(const BetOperator& t) {
    const LaurentSymbol det = det_symbol(t.symbol());
    if (det.is_zero()) throw ZeroSymbol("kernel: determinant of the symbol vanishes identically");
    if (circle_zero_test(det)) throw CircleZero("kernel: symbol determinant vanishes on the unit circle");
}

KernelData kernel_solve(const BetOperator& t, const PrecisionPolicy& policy, bool need_basis) {
    require_fredholm_symbol(t);
    const long index = -winding_number(det_symbol(t.symbol()));
    for (long prec = std::max(policy.bits, 16L);; prec *= 2) {
        try {
            Attempt a = kernel_attempt(t, prec);
            if (a.alpha_lo == a.alpha_hi) return KernelData{a.alpha_hi, std::move(a.basis)};
            // alpha - beta = index pins alpha when the adjoint system is sharper.
            const Attempt b = kernel_attempt(bet_adjoint(t), prec);
            const long lo = std::max(static_cast<long>(a.alpha_lo), static_cast<long>(b.alpha_lo) + index);
            const long hi = std::min(static_cast<long>(a.alpha_hi), static_cast<long>(b.alpha_hi) + index);
            if (lo == hi) {
                const std::size_t alpha = static_cast<std::size_t>(lo);
                if (alpha == a.alpha_hi) return KernelData{alpha, std::move(a.basis)};
                if (!need_basis) return KernelData{alpha, {}};
            }
        } catch (const PrecisionExhausted&) {
            if (prec * 2 > policy.max_bits) throw;
        }
        if (prec * 2 > policy.max_bits)
            throw PrecisionExhausted("kernel: rank not certified at " + std::to_string(prec) + " bits");
    }
}

// Basis of N(T^(k+1)) from a basis of N(T^k), or nothing when the rank is not certified.
std::optional<std::vector<ExpPolyVector>> preimage_step(const BetOperator& t, const std::vector<ExpPolyVector>& basis,
                                                        const PrecisionPolicy& policy) {
    for (long prec = std::max(policy.bits, 16L);; prec *= 2) {
        try {
            Attempt a = kernel_attempt(t, prec, basis);
            if (a.alpha_lo == a.alpha_hi && a.basis.size() == a.alpha_hi) return std::move(a.basis);
        } catch (const PrecisionExhausted&) {
        }
        if (prec * 2 > policy.max_bits) return std::nullopt;
    }
}

// Smallest k with N(T^k) = N(T^(k+1)). The kernel chain is followed by preimages, which keeps
// the linear systems at the size of the one for T; explicit powers are the fallback when a
// preimage rank cannot be certified.
ExtNat ascent_of(const BetOperator& t, const KernelData& kd, long index, std::size_t cap,
                 const PrecisionPolicy& policy) {
    if (kd.alpha == 0) return ExtNat::finite(0);
    if (index > 0) return ExtNat::infinite();
    std::size_t prev = kd.alpha;
    std::optional<std::vector<ExpPolyVector>> basis;
    if (kd.basis.size() == kd.alpha) basis = kd.basis;
    for (std::size_t k = 1; k <= cap; ++k) {
        if (basis) basis = preimage_step(t, *basis, policy);
        const std::size_t next = basis ? basis->size() : kernel_solve(bet_power(t, k + 1), policy, false).alpha;
        if (next == prev) return ExtNat::finite(k);
        prev = next;
    }
    return ExtNat::exceeds_cap(cap);
}

}  // namespace

KernelData kernel_data(const BetOperator& t, const PrecisionPolicy& policy) { return kernel_solve(t, policy, true); }

std::size_t kernel_dimension(const BetOperator& t, const PrecisionPolicy& policy) {
    return kernel_solve(t, policy, false).alpha;
}

FredholmData fredholm_data(const BetOperator& t, std::size_t cap, const PrecisionPolicy& policy) {
    FredholmData fd;
    const LaurentSymbol det = det_symbol(t.symbol());
    if (det.is_zero()) {
        fd.degenerate_symbol = true;
        fd.alpha = t.dim() == 1 ? ExtNat::infinite() : ExtNat::exceeds_cap(0);
        fd.beta = ExtNat::infinite();
        return fd;
    }
    if (circle_zero_test(det)) {
        // Not semi-Fredholm: the range is not closed, so its codimension is infinite.
        fd.beta = ExtNat::infinite();
        return fd;
    }
    const long index = -winding_number(det);
    KernelData kd;
    try {
        kd = kernel_solve(t, policy, true);
        fd.kernel_basis_available = true;
    } catch (const PrecisionExhausted&) {
        kd = kernel_solve(t, policy, false);
    }
    const long beta = static_cast<long>(kd.alpha) - index;
    if (beta < 0) throw DimensionCheckFailed("fredholm_data: kernel dimension below the index");
    fd.semi_fredholm = true;
    fd.index = index;
    fd.alpha = ExtNat::finite(kd.alpha);
    fd.beta = ExtNat::finite(static_cast<std::size_t>(beta));
    fd.ascent = ascent_of(t, kd, index, cap, policy);
    fd.kernel_basis = std::move(kd.basis);
    if (beta == 0) {
        fd.descent = ExtNat::finite(0);
    } else if (index < 0) {
        fd.descent = ExtNat::infinite();
    } else {
        const BetOperator adj = bet_adjoint(t);
        KernelData kd_adj;
        try {
            kd_adj = kernel_solve(adj, policy, true);
        } catch (const PrecisionExhausted&) {
            kd_adj.alpha = static_cast<std::size_t>(beta);
        }
        if (kd_adj.alpha != static_cast<std::size_t>(beta))
            throw DimensionCheckFailed("fredholm_data: adjoint kernel disagrees with the index");
        fd.descent = ascent_of(adj, kd_adj, -index, cap, policy);
    }
    return fd;
}

AscentDescentExt asc_des(const BetOperator& t, std::size_t cap, const PrecisionPolicy& policy) {
    const FredholmData fd = fredholm_data(t, cap, policy);
    return {fd.ascent, fd.descent};
}

}  // namespace browder
