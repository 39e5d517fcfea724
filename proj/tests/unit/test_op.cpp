#include "browder/op/bet_operator.hpp"

#include "random_ops.hpp"

#include <doctest.h>

#include <cmath>

using namespace browder;
using linalg::NumMatrix;

namespace {

const GaussQ half(mpq_class(1, 2));

NumMatrix dense_product(const NumMatrix& a, const NumMatrix& b) { return a * b; }

/// Entries of s and t compared exactly on the leading `keep` x `keep` block.
void check_exact_window(const BetOperator& s, const NumMatrix& dense, std::size_t n, std::size_t keep) {
    const NumMatrix w = s.window(n);
    for (std::size_t bi = 0; bi < s.dim(); ++bi)
        for (std::size_t bj = 0; bj < s.dim(); ++bj)
            for (std::size_t i = 0; i < keep; ++i)
                for (std::size_t j = 0; j < keep; ++j) {
                    const Num& x = w(bi * n + i, bj * n + j);
                    const Num& y = dense(bi * n + i, bj * n + j);
                    REQUIRE(x.is_exact());
                    REQUIRE(y.is_exact());
                    CHECK(x.exact() == y.exact());
                }
}

bool is_identity_window(const NumMatrix& w) {
    for (std::size_t i = 0; i < w.rows(); ++i)
        for (std::size_t j = 0; j < w.cols(); ++j)
            if (!w(i, j).is_exact() || !(w(i, j).exact() == GaussQ(i == j ? 1 : 0))) return false;
    return true;
}

}  // namespace

TEST_CASE("shift relations") {
    const BetOperator s = BetOperator::shift();
    const BetOperator sa = BetOperator::backward_shift();
    const BetOperator ss = bet_compose(sa, s);
    CHECK(ss.perturbation().empty());
    CHECK(is_identity_window(ss.window(20)));
    const BetOperator p = bet_compose(s, sa);
    REQUIRE(p.perturbation().size() == 1);
    const NumMatrix w = p.window(10);
    CHECK(w(0, 0).exact() == GaussQ(0));
    for (std::size_t i = 1; i < 10; ++i) CHECK(w(i, i).exact() == GaussQ(1));
    CHECK(s.entry(0, 1, 0, 0).exact() == GaussQ(1));
    CHECK(s.entry(0, 0, 0, 1).exact() == GaussQ(0));
}

TEST_CASE("composition matches dense products on finitely supported instances") {
    std::mt19937_64 rng(17);
    const std::size_t n = 40;
    for (int trial = 0; trial < 25; ++trial) {
        const BetOperator a = testing::random_operator(rng, 2, false);
        const BetOperator b = testing::random_operator(rng, 2, false);
        const BetOperator ab = bet_compose(a, b);
        // Bandwidths are at most 3 and perturbation heads at most 3 long.
        check_exact_window(ab, dense_product(a.window(n), b.window(n)), n, n - 12);
        check_exact_window(bet_add(a, b), [&] {
            NumMatrix m = a.window(n);
            const NumMatrix bw = b.window(n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m(i, j) += bw(i, j);
            return m;
        }(), n, n);
    }
}

TEST_CASE("composition with geometric tails matches dense products to truncation error") {
    std::mt19937_64 rng(23);
    const std::size_t n = 60;
    for (int trial = 0; trial < 10; ++trial) {
        const BetOperator a = testing::random_operator(rng, 2, true);
        const BetOperator b = testing::random_operator(rng, 2, true);
        const NumMatrix w = bet_compose(a, b).window(n);
        const NumMatrix d = a.window(n) * b.window(n);
        for (std::size_t i = 0; i < 20; ++i)
            for (std::size_t j = 0; j < 20; ++j) {
                CHECK(std::abs(w(i, j).re_double() - d(i, j).re_double()) < 1e-9);
                CHECK(std::abs(w(i, j).im_double() - d(i, j).im_double()) < 1e-9);
            }
    }
}

TEST_CASE("adjoint is the conjugate transpose") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        const BetOperator a = testing::random_operator(rng, 2, true);
        const NumMatrix w = bet_adjoint(a).window(15);
        const NumMatrix h = a.window(15).conjugate_transpose();
        for (std::size_t i = 0; i < 15; ++i)
            for (std::size_t j = 0; j < 15; ++j) CHECK((w(i, j) - h(i, j)).is_zero() != Tri::no);
    }
}

TEST_CASE("apply agrees with the matrix entries") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const BetOperator a = testing::random_operator(rng, 2, true);
        const ExpPolyVector x = testing::random_vector(rng, true);
        const ExpPolyVector y = a.apply(x);
        const NumMatrix w = a.window(80);
        for (std::size_t i = 0; i < 10; ++i) {
            Num s(0);
            for (std::size_t j = 0; j < 80; ++j) s += w(i, j) * x.at(0, j);
            CHECK(std::abs(s.re_double() - y.at(0, i).re_double()) < 1e-9);
        }
    }
}

TEST_CASE("Toeplitz kernel of a geometric vector") {
    const BetOperator t = translate(BetOperator::backward_shift(), half);
    const ExpPolyVector g = ExpPolyVector::geometric(Root(half));
    CHECK(t.apply(g).is_zero() == Tri::yes);
    CHECK(inner(g, g).exact() == GaussQ(mpq_class(4, 3)));
}

TEST_CASE("closed-form inner products match partial sums") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        const ExpPolyVector x = testing::random_vector(rng, true);
        const ExpPolyVector y = testing::random_vector(rng, true);
        Num s(0);
        for (std::size_t n = 0; n < 120; ++n) s += x.at(0, n) * y.at(0, n).conj();
        const Num ip = inner(x, y);
        CHECK(std::abs(ip.re_double() - s.re_double()) < 1e-12);
        CHECK(std::abs(ip.im_double() - s.im_double()) < 1e-12);
    }
    // sum n^2 (1/2)^n = 6
    CHECK(power_sum(2, Num(half)).exact() == GaussQ(6));
}

TEST_CASE("normalisation merges finitely supported terms") {
    std::vector<RankOne> terms{{ExpPolyVector::unit(0), ExpPolyVector::unit(0)},
                               {ExpPolyVector::unit(1), ExpPolyVector::unit(0)},
                               {Num(-1) * ExpPolyVector::unit(0), ExpPolyVector::unit(0)}};
    const auto merged = normalize_terms(terms, 1);
    REQUIRE(merged.size() == 1);
    const BetOperator t(MatrixSymbol(1), merged);
    CHECK(t.entry(0, 1, 0, 0).exact() == GaussQ(1));
    CHECK(t.entry(0, 0, 0, 0).exact() == GaussQ(0));
}

TEST_CASE("assembled operator matrix") {
    const BetOperator m = assemble_MC(BetOperator::shift(), BetOperator::backward_shift(),
                                      BetOperator::rank_one(ExpPolyVector::unit(0), ExpPolyVector::unit(0)));
    CHECK(m.dim() == 2);
    const BetOperator mm = bet_compose(bet_adjoint(m), m);
    CHECK(is_identity_window(mm.window(40)));
    CHECK(is_identity_window(bet_compose(m, bet_adjoint(m)).window(40)));
    CHECK(is_identity_window(bet_power(m, 0).window(5)));
}
