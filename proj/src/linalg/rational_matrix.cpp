#include "browder/linalg/rational_matrix.hpp"

#include "browder/error.hpp"

#include <sstream>
#include <utility>

namespace browder::linalg {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<GaussQ>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw DimensionMismatch("ragged initializer for RationalMatrix");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = GaussQ(1);
    return m;
}

RationalMatrix RationalMatrix::conjugate_transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c).conj();
    return t;
}

bool RationalMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product: inner dimensions differ");
    RationalMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const GaussQ& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
        }
    return out;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum: shapes differ");
    RationalMatrix out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
    return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference: shapes differ");
    RationalMatrix out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
    return out;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::string RationalMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).to_string();
        os << "]";
    }
    os << "]";
    return os.str();
}

namespace {

// Gaussian integer a + b i.
struct GaussZ {
    mpz_class re{0};
    mpz_class im{0};

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

GaussZ mul(const GaussZ& x, const GaussZ& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

GaussZ sub(const GaussZ& x, const GaussZ& y) { return {x.re - y.re, x.im - y.im}; }

// Exact quotient x / y; Bareiss guarantees divisibility.
GaussZ exact_div(const GaussZ& x, const GaussZ& y) {
    const mpz_class n = y.re * y.re + y.im * y.im;
    GaussZ num{x.re * y.re + x.im * y.im, x.im * y.re - x.re * y.im};
    mpz_divexact(num.re.get_mpz_t(), num.re.get_mpz_t(), n.get_mpz_t());
    mpz_divexact(num.im.get_mpz_t(), num.im.get_mpz_t(), n.get_mpz_t());
    return num;
}

// Scales every row by the lcm of its denominators so that entries become Gaussian integers.
std::vector<std::vector<GaussZ>> integral_rows(const RationalMatrix& m) {
    std::vector<std::vector<GaussZ>> out(m.rows(), std::vector<GaussZ>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).re().get_den_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).im().get_den_mpz_t());
        }
        for (std::size_t c = 0; c < m.cols(); ++c) {
            mpq_class re = m(r, c).re() * l;
            mpq_class im = m(r, c).im() * l;
            out[r][c] = {re.get_num(), im.get_num()};
        }
    }
    return out;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
    auto a = integral_rows(m);
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    GaussZ prev{1, 0};
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot][c].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i][j] = exact_div(sub(mul(a[r][c], a[i][j]), mul(a[i][c], a[r][j])), prev);
            a[i][c] = GaussZ{};
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

std::vector<Vector> kernel_basis(const RationalMatrix& m) {
    RationalMatrix a = m;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a(pivot, c).is_zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(pivot, j), a(r, j));
        const GaussQ inv = GaussQ(1) / a(r, c);
        for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            const GaussQ f = a(i, c);
            for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vector v(cols);
        v[free] = GaussQ(1);
        for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -a(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Vector apply(const RationalMatrix& m, const Vector& v) {
    if (v.size() != m.cols()) throw DimensionMismatch("apply: vector length differs from column count");
    Vector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero() && !v[j].is_zero()) out[i] += m(i, j) * v[j];
    return out;
}

std::vector<PowerDefect> power_defects(const RationalMatrix& m, std::size_t kmax) {
    if (!m.square()) throw DimensionMismatch("power_defects: matrix must be square");
    if (kmax < 1) throw PreconditionFailed("power_defects: kmax must be at least 1");
    std::vector<PowerDefect> out;
    RationalMatrix power = m;
    for (std::size_t k = 1; k <= kmax; ++k) {
        const std::size_t rk = rank(power);
        out.push_back({m.cols() - rk, m.rows() - rk});
        if (k < kmax) power = power * m;
    }
    return out;
}

AscentDescent asc_des(const RationalMatrix& m) {
    if (!m.square()) throw DimensionMismatch("asc_des: matrix must be square");
    const std::size_t n = m.rows();
    // Chains stabilize by k = n, so n + 1 powers suffice.
    const auto defects = power_defects(m, n + 1);
    auto first_repeat = [&](auto select) {
        std::size_t previous = 0;  // k = 0: M^0 = I
        for (std::size_t k = 0; k <= n; ++k) {
            const std::size_t next = select(defects[k]);
            if (next == previous) return k;
            previous = next;
        }
        return n;
    };
    return {first_repeat([](const PowerDefect& d) { return d.alpha; }),
            first_repeat([](const PowerDefect& d) { return d.beta; })};
}

RationalMatrix assemble_block(const std::array<std::array<RationalMatrix, 2>, 2>& b) {
    const std::size_t r0 = b[0][0].rows(), r1 = b[1][0].rows();
    const std::size_t c0 = b[0][0].cols(), c1 = b[0][1].cols();
    if (b[0][1].rows() != r0 || b[1][1].rows() != r1 || b[1][0].cols() != c0 || b[1][1].cols() != c1)
        throw DimensionMismatch("assemble_block: blocks are not conformable");
    RationalMatrix out(r0 + r1, c0 + c1);
    for (std::size_t bi = 0; bi < 2; ++bi)
        for (std::size_t bj = 0; bj < 2; ++bj) {
            const RationalMatrix& blk = b[bi][bj];
            const std::size_t ro = bi ? r0 : 0, co = bj ? c0 : 0;
            for (std::size_t i = 0; i < blk.rows(); ++i)
                for (std::size_t j = 0; j < blk.cols(); ++j) out(ro + i, co + j) = blk(i, j);
        }
    return out;
}

bool invertible(const RationalMatrix& m) { return m.square() && rank(m) == m.rows(); }
bool injective(const RationalMatrix& m) { return rank(m) == m.cols(); }
bool surjective(const RationalMatrix& m) { return rank(m) == m.rows(); }

}  // namespace browder::linalg
