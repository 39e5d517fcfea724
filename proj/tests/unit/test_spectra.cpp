#include "browder/error.hpp"
#include "browder/spectra/render.hpp"

#include <doctest.h>

#include <sstream>

using namespace browder;

namespace {

const BetOperator S = BetOperator::shift();
const BetOperator Sa = BetOperator::backward_shift();
const BetOperator I = BetOperator::identity();

std::string csv(const SpectralGrid& g, bool witness = false) {
    std::ostringstream os;
    write_csv(g, os, witness);
    return os.str();
}

}  // namespace

TEST_CASE("pointwise verdicts") {
    const PointVerdict shifts = classify_point(S, Sa, GaussQ(0), ScanMode::all_C);
    CHECK(shifts.in_SPR == Tri::no);
    CHECK(shifts.in_sigma_lb_A == Tri::no);
    CHECK(shifts.in_sigma_rb_B == Tri::no);
    CHECK(shifts.index_condition_fails == Tri::no);

    const PointVerdict same = classify_point(S, S, GaussQ(0), ScanMode::all_C);
    CHECK(same.in_SPR == Tri::yes);
    CHECK(same.index_condition_fails == Tri::yes);

    const PointVerdict ident = classify_point(I, I, GaussQ(1), ScanMode::all_C);
    CHECK(ident.in_SPR == Tri::yes);
    CHECK(ident.in_sigma_lb_A == Tri::yes);

    const PointVerdict circle = classify_point(S, Sa, GaussQ(mpq_class(3, 5), mpq_class(4, 5)), ScanMode::all_C);
    CHECK(circle.in_SPR == Tri::yes);
}

TEST_CASE("verdicts do not depend on the mode") {
    for (const GaussQ& l : {GaussQ(0), GaussQ(mpq_class(1, 2), mpq_class(1, 3)), GaussQ(2), GaussQ(0, 1)}) {
        const PointVerdict a = classify_point(S, Sa, l, ScanMode::all_C);
        for (ScanMode m : {ScanMode::fredholm_C, ScanMode::invertible_C}) {
            const PointVerdict b = classify_point(S, Sa, l, m);
            CHECK(a.in_SPR == b.in_SPR);
            CHECK(a.in_sigma_lb_A == b.in_sigma_lb_A);
            CHECK(a.in_sigma_rb_B == b.in_sigma_rb_B);
            CHECK(a.index_condition_fails == b.index_condition_fails);
        }
    }
}

TEST_CASE("witnesses are verified completions") {
    PointOptions opt;
    opt.build_witness = true;
    for (ScanMode m : {ScanMode::all_C, ScanMode::invertible_C}) {
        CHECK(classify_point(S, Sa, GaussQ(mpq_class(1, 2)), m, opt).witness == WitnessState::verified);
        CHECK(classify_point(S, Sa, GaussQ(2), m, opt).witness == WitnessState::verified);
    }
    CHECK(classify_point(S, S, GaussQ(0), ScanMode::all_C, opt).witness == WitnessState::none);
}

TEST_CASE("regions and grids") {
    const Region r = parse_region("-1,1,-1/2,1/2");
    CHECK(r.re_min == -1);
    CHECK(r.im_max == mpq_class(1, 2));
    CHECK_THROWS_AS(parse_region("1,2,3"), ParseError);
    CHECK_THROWS_AS(parse_region("1,0,0,1"), ParseError);
    CHECK_THROWS_AS(parse_region("a,1,0,1"), ParseError);
    const SpectralGrid g = make_grid(r, mpq_class(1, 2), ScanMode::all_C);
    CHECK(g.cols == 5);
    CHECK(g.rows == 3);
    CHECK(g.point(0, 0) == GaussQ(-1, mpq_class(-1, 2)));
    CHECK(g.point(2, 4) == GaussQ(1, mpq_class(1, 2)));
    CHECK_THROWS_AS(make_grid(r, mpq_class(0), ScanMode::all_C), PreconditionFailed);
}

TEST_CASE("serial and parallel scans agree") {
    const Region r = parse_region("-3/2,3/2,-3/2,3/2");
    const SpectralGrid serial = scan_serial(S, Sa, r, mpq_class(1, 4));
    const SpectralGrid parallel = scan_parallel(S, Sa, r, mpq_class(1, 4));
    CHECK(csv(serial) == csv(parallel));
    // Points with |l| = 1 on the quarter grid: +-1, +-i.
    CHECK(serial.count(Tri::yes) == 4);
    CHECK(serial.count(Tri::undecided) == 0);
}

TEST_CASE("same shifts give the closed disk") {
    const SpectralGrid g = scan_parallel(S, S, parse_region("-2,2,-2,2"), mpq_class(1, 4));
    std::size_t inside = 0;
    for (std::size_t row = 0; row < g.rows; ++row)
        for (std::size_t col = 0; col < g.cols; ++col) inside += g.point(row, col).norm() <= 1;
    CHECK(g.count(Tri::yes) == inside);
}

TEST_CASE("identity pair: only the point 1") {
    const SpectralGrid g = scan_parallel(I, I, parse_region("-2,2,-1,1"), mpq_class(1, 2));
    CHECK(g.count(Tri::yes) == 1);
    for (const auto& v : g.verdicts)
        if (v.in_SPR == Tri::yes) CHECK(v.lambda == GaussQ(1));
}

TEST_CASE("CSV and SVG output") {
    const SpectralGrid g = scan_serial(S, Sa, parse_region("0,1,0,0"), mpq_class(1, 2));
    const std::string text = csv(g);
    CHECK(text.rfind("re,im,mode,in_sigma_lb_A,in_sigma_rb_B,index_condition_fails,in_SPR\n", 0) == 0);
    CHECK(text.find("1/2,0,all_C,no,no,no,no\n") != std::string::npos);
    CHECK(text.find("1,0,all_C,yes,yes,undecided,yes\n") != std::string::npos);
    std::ostringstream svg;
    write_svg(g, svg);
    CHECK(svg.str().find("<svg") == 0);
    CHECK(svg.str().find("undecided") != std::string::npos);
    ScanOptions opt;
    opt.witness = true;
    const SpectralGrid w = scan_serial(S, Sa, parse_region("0,1,0,0"), mpq_class(1, 2), opt);
    CHECK(csv(w, true).find(",verified\n") != std::string::npos);
}
