#include "browder/classify/classify.hpp"
#include "browder/error.hpp"

#include "random_ops.hpp"

#include <doctest.h>

using namespace browder;

namespace {

/// yes => yes whenever both flags are decided.
void check_implies(Tri a, Tri b) {
    if (a == Tri::yes && b != Tri::undecided) CHECK(b == Tri::yes);
}

void check_lattice(const OperatorClass& c) {
    check_implies(c.invertible, c.browder);
    check_implies(c.browder, c.weyl);
    check_implies(c.weyl, c.fredholm);
    check_implies(c.browder, c.left_semi_browder);
    check_implies(c.browder, c.right_semi_browder);
    check_implies(c.left_semi_browder, c.left_semi_fredholm);
    check_implies(c.right_semi_browder, c.right_semi_fredholm);
    check_implies(c.left_invertible, c.left_semi_browder);
    check_implies(c.right_invertible, c.right_semi_browder);
}

bool two_of_three(Tri a, Tri b, Tri m) {
    if (a == Tri::undecided || b == Tri::undecided || m == Tri::undecided) return true;
    return (a == Tri::yes) + (b == Tri::yes) + (m == Tri::yes) != 2;
}

}  // namespace

TEST_CASE("classes of the shifts and the identity") {
    const OperatorClass s = classify(BetOperator::shift());
    CHECK(s.left_invertible == Tri::yes);
    CHECK(s.left_semi_browder == Tri::yes);
    CHECK(s.right_semi_browder == Tri::no);
    CHECK(s.browder == Tri::no);
    CHECK(s.weyl == Tri::no);
    CHECK(s.fredholm == Tri::yes);

    const OperatorClass sa = classify(BetOperator::backward_shift());
    CHECK(sa.right_invertible == Tri::yes);
    CHECK(sa.right_semi_browder == Tri::yes);
    CHECK(sa.left_semi_browder == Tri::no);

    const OperatorClass i = classify(BetOperator::identity());
    for (const auto& [name, value] : i.flags()) CHECK_MESSAGE(value == Tri::yes, name);
    CHECK(i.all_decided());
}

TEST_CASE("circle zeros and degenerate symbols") {
    const OperatorClass cz = classify(translate(BetOperator::shift(), GaussQ(1)));
    for (const auto& [name, value] : cz.flags()) CHECK_MESSAGE(value == Tri::no, name);
    const OperatorClass zero = classify(BetOperator::zero());
    CHECK(zero.left_semi_fredholm == Tri::no);
    CHECK(zero.drazin_flag == Tri::undecided);
}

TEST_CASE("capped ascent leaves Browder undecided") {
    const BetOperator m = assemble_MC(BetOperator::shift(), BetOperator::backward_shift(), BetOperator::zero());
    const OperatorClass c = classify(m, 4);
    CHECK(c.fredholm == Tri::yes);
    CHECK(c.weyl == Tri::yes);
    CHECK(c.browder == Tri::undecided);
    CHECK(c.invertible == Tri::no);
}

TEST_CASE("spectral membership") {
    const BetOperator s = BetOperator::shift();
    CHECK(membership(s, GaussQ(0), SpectrumName::lb) == Tri::no);
    CHECK(membership(s, GaussQ(0), SpectrumName::b) == Tri::yes);
    CHECK(membership(BetOperator::identity(), GaussQ(1), SpectrumName::sigma) == Tri::yes);
    CHECK(membership(BetOperator::identity(), GaussQ(2), SpectrumName::sigma) == Tri::no);
    CHECK(parse_spectrum_name("rb") == SpectrumName::rb);
    CHECK_THROWS_AS(parse_spectrum_name("x"), ParseError);
}

TEST_CASE("Browder, Weyl and essential spectra are nested") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 20; ++trial) {
        const BetOperator t = testing::random_operator(rng, 1, false);
        for (int re = -2; re <= 2; ++re) {
            const GaussQ l(mpq_class(re, 2), mpq_class(trial % 3, 3));
            const Tri b = membership(t, l, SpectrumName::b, 6);
            const Tri w = membership(t, l, SpectrumName::w, 6);
            const Tri e = membership(t, l, SpectrumName::e, 6);
            check_implies(w, b);
            check_implies(e, w);
        }
    }
}

TEST_CASE("implication lattice and two-of-three laws on random triples") {
    std::mt19937_64 rng(53);
    int decided = 0;
    for (int trial = 0; trial < 80; ++trial) {
        const BetOperator a = testing::random_operator(rng, 1, true);
        const BetOperator b = testing::random_operator(rng, 1, true);
        const BetOperator c = testing::random_corner(rng);
        const OperatorClass ca = classify(a, 6);
        const OperatorClass cb = classify(b, 6);
        const OperatorClass cm = classify(assemble_MC(a, b, c), 6);
        check_lattice(ca);
        check_lattice(cb);
        check_lattice(cm);
        CHECK(two_of_three(ca.invertible, cb.invertible, cm.invertible));
        CHECK(two_of_three(ca.fredholm, cb.fredholm, cm.fredholm));
        CHECK(two_of_three(ca.weyl, cb.weyl, cm.weyl));
        CHECK(two_of_three(ca.browder, cb.browder, cm.browder));
        if (ca.browder == Tri::yes && cb.left_semi_browder != Tri::undecided &&
            cm.left_semi_browder != Tri::undecided)
            CHECK(cb.left_semi_browder == cm.left_semi_browder);
        if (cb.browder == Tri::yes && ca.right_semi_browder != Tri::undecided &&
            cm.right_semi_browder != Tri::undecided)
            CHECK(ca.right_semi_browder == cm.right_semi_browder);
        // A Browder M_C has finite asc(A) and des(B).
        if (cm.browder == Tri::yes) {
            const FredholmData fa = fredholm_data(a, 6);
            const FredholmData fb = fredholm_data(b, 6);
            CHECK(ext_finite(fa.ascent) != Tri::no);
            CHECK(ext_finite(fb.descent) != Tri::no);
        }
        decided += cm.all_decided();
    }
    CHECK(decided > 20);
}
