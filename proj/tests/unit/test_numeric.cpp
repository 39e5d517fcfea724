#include "browder/error.hpp"
#include "browder/numeric/num.hpp"

#include <doctest.h>

#include <random>

using namespace browder;

TEST_CASE("parsing exact rationals") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-1/2") == mpq_class(-1, 2));
    CHECK(parse_rational("0.125") == mpq_class(1, 8));
    CHECK(parse_rational("1e-2") == mpq_class(1, 100));
    CHECK(parse_rational(" 2/4 ") == mpq_class(1, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("parsing Gaussian rationals") {
    CHECK(parse_gauss("1/2") == GaussQ(mpq_class(1, 2)));
    CHECK(parse_gauss("1/2+1/3i") == GaussQ(mpq_class(1, 2), mpq_class(1, 3)));
    CHECK(parse_gauss("-i") == GaussQ(0, -1));
    CHECK(parse_gauss("2,-3") == GaussQ(2, -3));
    CHECK(parse_gauss("1e-1-2i") == GaussQ(mpq_class(1, 10), -2));
    CHECK(GaussQ(mpq_class(1, 2), -1).to_string() == "1/2-i");
}

TEST_CASE("Gaussian rational field laws") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> d(-9, 9);
    auto random_q = [&] {
        return GaussQ(mpq_class(d(rng), 1 + std::abs(d(rng))), mpq_class(d(rng), 1 + std::abs(d(rng))));
    };
    for (int k = 0; k < 200; ++k) {
        const GaussQ a = random_q();
        const GaussQ b = random_q();
        const GaussQ c = random_q();
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a * a.conj()).im() == 0);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("balls enclose the exact result") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> d(-50, 50);
    for (int k = 0; k < 200; ++k) {
        const GaussQ a(mpq_class(d(rng), 7), mpq_class(d(rng), 3));
        const GaussQ b(mpq_class(d(rng), 11), mpq_class(d(rng) + 101, 13));
        const Ball ba(a, 64);
        const Ball bb(b, 64);
        CHECK(Ball(a * b + a, 64).overlaps(ba * bb + ba));
        CHECK(Ball(a / b, 64).overlaps(ba / bb));
        CHECK(Ball(a - b, 64).overlaps(ba - bb));
    }
}

TEST_CASE("Num stays exact until a ball enters") {
    const Num x(GaussQ(mpq_class(1, 3)));
    CHECK((x * x + Num(1)).is_exact());
    CHECK((x * x).exact() == GaussQ(mpq_class(1, 9)));
    const Num y = x * Num(Ball(GaussQ(3), 128));
    CHECK_FALSE(y.is_exact());
    CHECK((y - Num(1)).is_zero() == Tri::undecided);
    CHECK(Num(0).is_zero() == Tri::yes);
    CHECK(x.is_zero() == Tri::no);
    CHECK_THROWS_AS(Num(1) / Num(Ball(GaussQ(0), 128)), PrecisionExhausted);
    CHECK(pow(Num(GaussQ(mpq_class(1, 2))), 3).exact() == GaussQ(mpq_class(1, 8)));
}

TEST_CASE("three-valued logic") {
    CHECK((Tri::yes && Tri::undecided) == Tri::undecided);
    CHECK((Tri::no && Tri::undecided) == Tri::no);
    CHECK((Tri::yes || Tri::undecided) == Tri::yes);
    CHECK((Tri::no || Tri::undecided) == Tri::undecided);
    CHECK(!Tri::undecided == Tri::undecided);
    CHECK(to_string(Tri::no) == "no");
}
