#include "browder/linalg/certified_elimination.hpp"

#include "browder/error.hpp"

#include <optional>
#include <utility>

namespace browder::linalg {

bool NumMatrix::all_exact() const {
    for (const auto& e : entries_)
        if (!e.is_exact()) return false;
    return true;
}

NumMatrix NumMatrix::conjugate_transpose() const {
    NumMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c).conj();
    return t;
}

NumMatrix operator*(const NumMatrix& a, const NumMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("NumMatrix product: inner dimensions differ");
    NumMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_exact_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_exact_zero()) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

namespace {

// Picks the row holding a certified-nonzero entry in column c (rows >= r): exact entries first,
// then the ball with the largest lower modulus bound.
std::optional<std::size_t> choose_pivot(const NumMatrix& a, std::size_t r, std::size_t c, bool& uncertain) {
    std::optional<std::size_t> best;
    double best_lower = 0.0;
    uncertain = false;
    for (std::size_t i = r; i < a.rows(); ++i) {
        const Num& e = a(i, c);
        const Tri z = e.is_zero();
        if (z == Tri::yes) continue;
        if (z == Tri::undecided) {
            uncertain = true;
            continue;
        }
        if (e.is_exact()) return i;
        const double lower = e.abs_lower();
        if (!best || lower > best_lower) {
            best = i;
            best_lower = lower;
        }
    }
    return best;
}

}  // namespace

CertifiedRank certified_rank(const NumMatrix& m) {
    NumMatrix a = m;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::vector<std::size_t> pivot_cols;
    std::size_t uncertain_cols = 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        if (r == rows) break;
        bool uncertain = false;
        auto pivot = choose_pivot(a, r, c, uncertain);
        if (!pivot) {
            if (uncertain) ++uncertain_cols;
            continue;
        }
        if (*pivot != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(*pivot, j), a(r, j));
        const Num inv = Num(1) / a(r, c);
        for (std::size_t j = c; j < cols; ++j) a(r, j) = a(r, j) * inv;
        a(r, c) = Num(1);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c).is_exact_zero()) continue;
            const Num f = a(i, c);
            for (std::size_t j = c + 1; j < cols; ++j)
                if (!a(r, j).is_exact_zero()) a(i, j) -= f * a(r, j);
            a(i, c) = Num(0);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    CertifiedRank out;
    out.rank_lo = pivot_cols.size();
    out.pivot_cols = pivot_cols;
    const std::size_t cap = std::min(rows, cols);
    out.rank_hi = std::min(cap, out.rank_lo + uncertain_cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Num> v(cols, Num(0));
        v[free] = Num(1);
        for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -a(k, free);
        out.null_basis.push_back(std::move(v));
    }
    return out;
}

std::vector<Num> solve(const NumMatrix& m, const std::vector<Num>& b) {
    const std::size_t n = m.rows();
    if (m.cols() != n || b.size() != n) throw DimensionMismatch("solve: square system expected");
    NumMatrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n) = b[i];
    }
    for (std::size_t c = 0; c < n; ++c) {
        bool uncertain = false;
        auto pivot = choose_pivot(aug, c, c, uncertain);
        if (!pivot) throw PrecisionExhausted("solve: matrix not certified invertible");
        if (*pivot != c)
            for (std::size_t j = 0; j <= n; ++j) std::swap(aug(*pivot, j), aug(c, j));
        const Num inv = Num(1) / aug(c, c);
        for (std::size_t j = c; j <= n; ++j) aug(c, j) = aug(c, j) * inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || aug(i, c).is_exact_zero()) continue;
            const Num f = aug(i, c);
            for (std::size_t j = c; j <= n; ++j) aug(i, j) -= f * aug(c, j);
        }
    }
    std::vector<Num> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
    return x;
}

NumMatrix inverse(const NumMatrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw DimensionMismatch("inverse: square matrix expected");
    NumMatrix out(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Num> e(n, Num(0));
        e[j] = Num(1);
        auto col = solve(m, e);
        for (std::size_t i = 0; i < n; ++i) out(i, j) = col[i];
    }
    return out;
}

}  // namespace browder::linalg
