#include "browder/error.hpp"
#include "browder/symbol/laurent.hpp"
#include "browder/symbol/roots.hpp"

#include "random_ops.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>

using namespace browder;

namespace {

/// Argument-principle estimate of the winding number from m samples.
long sampled_winding(const LaurentSymbol& p, int m) {
    double total = 0;
    std::complex<double> prev;
    for (int k = 0; k <= m; ++k) {
        const double t = 2 * M_PI * k / m;
        std::complex<double> v = 0;
        for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
            const std::complex<double> c(p.coeffs()[j].re_double(), p.coeffs()[j].im_double());
            v += c * std::polar(1.0, t * static_cast<double>(p.low() + static_cast<long>(j)));
        }
        if (k > 0) total += std::arg(v / prev);
        prev = v;
    }
    return std::lround(total / (2 * M_PI));
}

}  // namespace

TEST_CASE("Laurent arithmetic and adjoint") {
    const LaurentSymbol z = LaurentSymbol::z();
    const LaurentSymbol p = z - LaurentSymbol(GaussQ(mpq_class(1, 2)));
    CHECK(p.low() == 0);
    CHECK(p.high() == 1);
    CHECK(p(GaussQ(mpq_class(1, 2))).is_zero());
    CHECK(p.adjoint() == LaurentSymbol::zinv() - LaurentSymbol(GaussQ(mpq_class(1, 2))));
    CHECK(z * LaurentSymbol::zinv() == LaurentSymbol(GaussQ(1)));
    const LaurentSymbol q = LaurentSymbol::monomial(GaussQ(0, 2), -2);
    CHECK(q.adjoint() == LaurentSymbol::monomial(GaussQ(0, -2), 2));
    CHECK(p.translate(GaussQ(1)) == z - LaurentSymbol(GaussQ(mpq_class(3, 2))));
}

TEST_CASE("winding numbers of simple symbols") {
    CHECK(winding_number(LaurentSymbol::z()) == 1);
    CHECK(winding_number(LaurentSymbol::zinv()) == -1);
    CHECK(winding_number(LaurentSymbol(GaussQ(3))) == 0);
    CHECK(winding_number(LaurentSymbol::from_roots(GaussQ(1), 0, {GaussQ(2)})) == 0);
    CHECK(winding_number(LaurentSymbol::from_roots(GaussQ(1), -1, {GaussQ(mpq_class(1, 2)), GaussQ(0, 3)})) == 0);
    CHECK_THROWS_AS(winding_number(LaurentSymbol::from_roots(GaussQ(1), 0, {GaussQ(1)})), CircleZero);
    CHECK_THROWS_AS(winding_number(LaurentSymbol()), ZeroSymbol);
}

TEST_CASE("circle zero test is exact") {
    CHECK(circle_zero_test(LaurentSymbol::from_roots(GaussQ(1), 0, {GaussQ(mpq_class(3, 5), mpq_class(4, 5))})));
    CHECK_FALSE(circle_zero_test(LaurentSymbol::from_roots(GaussQ(1), 0, {GaussQ(mpq_class(3, 5), mpq_class(4, 6))})));
    // z^2 + 1/2 has roots of modulus 1/sqrt 2; z^2 - z + 1 has roots on the circle.
    CHECK_FALSE(circle_zero_test(LaurentSymbol(0, {GaussQ(mpq_class(1, 2)), GaussQ(0), GaussQ(1)})));
    CHECK(circle_zero_test(LaurentSymbol(0, {GaussQ(1), GaussQ(-1), GaussQ(1)})));
}

TEST_CASE("winding number agrees with the argument principle on random symbols") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> c(-6, 6);
    int checked = 0;
    while (checked < 60) {
        std::vector<GaussQ> coeffs;
        const int deg = 1 + checked % 5;
        for (int k = 0; k <= deg; ++k) coeffs.emplace_back(mpq_class(c(rng), 1 + std::abs(c(rng))), mpq_class(c(rng), 3));
        const LaurentSymbol p(-(checked % 3), coeffs);
        if (p.is_zero() || circle_zero_test(p)) continue;
        CHECK(winding_number(p) == sampled_winding(p, 4096));
        ++checked;
    }
}

TEST_CASE("rational roots come back exactly") {
    const Poly p = LaurentSymbol::from_roots(GaussQ(2), 0, {GaussQ(mpq_class(1, 2)), GaussQ(mpq_class(1, 2)), GaussQ(0, -3)})
                       .polynomial_part();
    const auto roots = nonzero_roots(p, 128, true);
    REQUIRE(roots.size() == 2);
    std::size_t total = 0;
    for (const auto& r : roots) {
        CHECK(r.root.is_exact());
        total += r.multiplicity;
        if (r.root.exact() == GaussQ(mpq_class(1, 2))) CHECK(r.multiplicity == 2);
    }
    CHECK(total == 3);
}

TEST_CASE("irrational roots are isolated and separated from the circle") {
    // z^2 - 1/7: roots +-1/sqrt 7.
    const Poly p{GaussQ(mpq_class(-1, 7)), GaussQ(0), GaussQ(1)};
    const auto roots = nonzero_roots(p, 128, true);
    REQUIRE(roots.size() == 2);
    for (const auto& r : roots) {
        CHECK_FALSE(r.root.is_exact());
        CHECK(r.root.inside_unit_disk());
        CHECK(std::abs(r.root.modulus_estimate() - 1 / std::sqrt(7.0)) < 1e-12);
    }
    CHECK_FALSE(same_root(roots[0].root, roots[1].root));
    CHECK(same_root(roots[0].root, roots[0].root));
}

TEST_CASE("roots inside the unit disk are counted exactly") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<GaussQ> roots;
        std::size_t inside = 0;
        const int n = testing::uniform(rng, 1, 5);
        for (int k = 0; k < n; ++k) {
            roots.push_back(testing::random_root(rng));
            inside += roots.back().norm() < 1;
        }
        const Poly p = LaurentSymbol::from_roots(GaussQ(1), 0, roots).polynomial_part();
        CHECK(count_roots_in_unit_disk(p) == inside);
    }
}

TEST_CASE("matrix symbols") {
    const MatrixSymbol m = MatrixSymbol::upper_triangular(LaurentSymbol::z(), LaurentSymbol(GaussQ(1)), LaurentSymbol::zinv());
    CHECK(m.dim() == 2);
    CHECK(det_symbol(m) == LaurentSymbol(GaussQ(1)));
    CHECK(m.adjoint()(1, 0) == LaurentSymbol(GaussQ(1)));
    CHECK(m.adjoint()(0, 0) == LaurentSymbol::zinv());
    CHECK(det_symbol(m.translate(GaussQ(1))) == (LaurentSymbol::z() - LaurentSymbol(GaussQ(1))) *
                                                    (LaurentSymbol::zinv() - LaurentSymbol(GaussQ(1))));
}
