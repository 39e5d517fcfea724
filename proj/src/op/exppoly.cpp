#include "browder/op/exppoly.hpp"

#include "browder/error.hpp"

#include <algorithm>

namespace browder {

namespace {

Num eval_poly(const std::vector<Num>& poly, const Num& n) {
    Num acc(0);
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * n + *it;
    return acc;
}

void trim(std::vector<Num>& v) {
    while (!v.empty() && v.back().is_exact_zero()) v.pop_back();
}

bool roots_identical(const Root& a, const Root& b) {
    if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
    if (a.is_exact() || b.is_exact()) return false;
    return &a.algebraic() == &b.algebraic();
}

bool nums_identical(const std::vector<Num>& a, const std::vector<Num>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].exact_equals(b[i])) return false;
    return true;
}

std::vector<Num> add_coeffs(std::vector<Num> a, const std::vector<Num>& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
}

}  // namespace

Num Sequence::at(std::size_t n) const {
    Num v = n < head.size() ? head[n] : Num(0);
    const Num nn(static_cast<long>(n));
    for (const auto& t : tails) v += eval_poly(t.poly, nn) * pow(t.root.value(), static_cast<long>(n));
    return v;
}

ExpPolyVector ExpPolyVector::unit(std::size_t index, std::size_t comp, std::size_t dim) {
    ExpPolyVector v(dim);
    v.comps_[comp].head.assign(index + 1, Num(0));
    v.comps_[comp].head[index] = Num(1);
    return v;
}

ExpPolyVector ExpPolyVector::from_head(std::vector<Num> head) {
    ExpPolyVector v(1);
    v.comps_[0].head = std::move(head);
    return v;
}

ExpPolyVector ExpPolyVector::geometric(const Root& root, const Num& scale) {
    ExpPolyVector v(1);
    v.comps_[0].tails.push_back(Tail{root, {scale}});
    return v;
}

std::size_t ExpPolyVector::head_length() const {
    std::size_t n = 0;
    for (const auto& c : comps_) n = std::max(n, c.head.size());
    return n;
}

bool ExpPolyVector::has_tails() const {
    return std::any_of(comps_.begin(), comps_.end(), [](const auto& c) { return !c.tails.empty(); });
}

bool ExpPolyVector::all_exact() const {
    for (const auto& c : comps_) {
        for (const auto& h : c.head)
            if (!h.is_exact()) return false;
        for (const auto& t : c.tails) {
            if (!t.root.is_exact()) return false;
            for (const auto& q : t.poly)
                if (!q.is_exact()) return false;
        }
    }
    return true;
}

ExpPolyVector ExpPolyVector::normalized() const {
    ExpPolyVector out(dim());
    for (std::size_t c = 0; c < dim(); ++c) {
        Sequence s;
        s.head = comps_[c].head;
        trim(s.head);
        for (const auto& t : comps_[c].tails) {
            auto it = std::find_if(s.tails.begin(), s.tails.end(),
                                   [&](const Tail& u) { return same_root(u.root, t.root); });
            if (it == s.tails.end())
                s.tails.push_back(t);
            else
                it->poly = add_coeffs(std::move(it->poly), t.poly);
        }
        for (auto& t : s.tails) trim(t.poly);
        std::erase_if(s.tails, [](const Tail& t) { return t.poly.empty(); });
        out.comps_[c] = std::move(s);
    }
    return out;
}

Tri ExpPolyVector::is_zero() const {
    const ExpPolyVector n = normalized();
    bool undecided = false;
    for (const auto& c : n.comps_) {
        for (const auto& h : c.head) {
            const Tri z = h.is_zero();
            if (z == Tri::no) return Tri::no;
            if (z == Tri::undecided) undecided = true;
        }
        for (const auto& t : c.tails)
            for (const auto& q : t.poly) {
                const Tri z = q.is_zero();
                if (z == Tri::no) return Tri::no;
                if (z == Tri::undecided) undecided = true;
            }
    }
    return undecided ? Tri::undecided : Tri::yes;
}

ExpPolyVector ExpPolyVector::embed(std::size_t comp, std::size_t dim) const {
    if (this->dim() != 1 || comp >= dim) throw DimensionMismatch("embed: expects a one-component vector");
    ExpPolyVector v(dim);
    v.comps_[comp] = comps_[0];
    return v;
}

ExpPolyVector ExpPolyVector::component(std::size_t comp) const {
    ExpPolyVector v(1);
    v.comps_[0] = comps_.at(comp);
    return v;
}

ExpPolyVector operator+(const ExpPolyVector& a, const ExpPolyVector& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("vector sum: dimensions differ");
    ExpPolyVector out(a.dim());
    for (std::size_t c = 0; c < a.dim(); ++c) {
        Sequence s;
        s.head = add_coeffs(a.comps_[c].head, b.comps_[c].head);
        s.tails = a.comps_[c].tails;
        s.tails.insert(s.tails.end(), b.comps_[c].tails.begin(), b.comps_[c].tails.end());
        out.comps_[c] = std::move(s);
    }
    return out.normalized();
}

ExpPolyVector operator*(const Num& s, const ExpPolyVector& v) {
    ExpPolyVector out(v.dim());
    if (s.is_exact_zero()) return out;
    for (std::size_t c = 0; c < v.dim(); ++c) {
        Sequence seq = v.comps_[c];
        for (auto& h : seq.head) h = s * h;
        for (auto& t : seq.tails)
            for (auto& q : t.poly) q = s * q;
        out.comps_[c] = std::move(seq);
    }
    return out;
}

ExpPolyVector operator-(const ExpPolyVector& a, const ExpPolyVector& b) { return a + Num(-1) * b; }

bool ExpPolyVector::same_as(const ExpPolyVector& other) const {
    if (dim() != other.dim()) return false;
    const ExpPolyVector x = normalized();
    const ExpPolyVector y = other.normalized();
    for (std::size_t c = 0; c < dim(); ++c) {
        const Sequence& s = x.comps_[c];
        const Sequence& t = y.comps_[c];
        if (!nums_identical(s.head, t.head) || s.tails.size() != t.tails.size()) return false;
        for (std::size_t k = 0; k < s.tails.size(); ++k)
            if (!roots_identical(s.tails[k].root, t.tails[k].root) || !nums_identical(s.tails[k].poly, t.tails[k].poly))
                return false;
    }
    return true;
}

Num power_sum(std::size_t m, const Num& w) {
    // Stirling numbers of the second kind S(m, j).
    std::vector<std::vector<long>> s2(m + 1, std::vector<long>(m + 1, 0));
    s2[0][0] = 1;
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = 1; j <= i; ++j)
            s2[i][j] = static_cast<long>(j) * s2[i - 1][j] + s2[i - 1][j - 1];
    const Num inv = Num(1) / (Num(1) - w);
    Num total(0);
    Num fact(1);
    Num wj(1);
    Num invj = inv;
    for (std::size_t j = 0; j <= m; ++j) {
        if (j > 0) {
            fact *= Num(static_cast<long>(j));
            wj *= w;
            invj *= inv;
        }
        if (s2[m][j] != 0) total += Num(s2[m][j]) * fact * wj * invj;
    }
    return total;
}

Num inner(const ExpPolyVector& x, const ExpPolyVector& y) {
    if (x.dim() != y.dim()) throw DimensionMismatch("inner product: dimensions differ");
    Num total(0);
    for (std::size_t c = 0; c < x.dim(); ++c) {
        const Sequence& sx = x.comp(c);
        const Sequence& sy = y.comp(c);
        for (std::size_t n = 0; n < sx.head.size(); ++n)
            if (!sx.head[n].is_exact_zero()) total += sx.head[n] * sy.at(n).conj();
        if (!sx.tails.empty()) {
            Sequence tx;
            tx.tails = sx.tails;
            for (std::size_t n = 0; n < sy.head.size(); ++n)
                if (!sy.head[n].is_exact_zero()) total += tx.at(n) * sy.head[n].conj();
        }
        for (const auto& a : sx.tails)
            for (const auto& b : sy.tails) {
                const Num w = a.root.value() * b.root.value().conj();
                for (std::size_t k = 0; k < a.poly.size(); ++k)
                    for (std::size_t l = 0; l < b.poly.size(); ++l)
                        total += a.poly[k] * b.poly[l].conj() * power_sum(k + l, w);
            }
    }
    return total;
}

}  // namespace browder
