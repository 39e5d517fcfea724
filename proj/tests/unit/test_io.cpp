#include "browder/error.hpp"
#include "browder/io/spec_json.hpp"

#include "random_ops.hpp"

#include <doctest.h>

using namespace browder;
using io::Json;

namespace {

bool same_window(const BetOperator& a, const BetOperator& b, std::size_t n) {
    if (a.dim() != b.dim()) return false;
    const auto x = a.window(n);
    const auto y = b.window(n);
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            if ((x(i, j) - y(i, j)).is_zero() == Tri::no) return false;
    return true;
}

}  // namespace

TEST_CASE("coefficients in every accepted form") {
    CHECK(io::coeff_from_json(Json::parse("[1, 0]")) == GaussQ(1));
    CHECK(io::coeff_from_json(Json::parse("[-0.5, 0]")) == GaussQ(mpq_class(-1, 2)));
    CHECK(io::coeff_from_json(Json::parse("[0.1, 0]")) == GaussQ(mpq_class(1, 10)));
    CHECK(io::coeff_from_json(Json::parse("[\"1/3\", \"-2\"]")) == GaussQ(mpq_class(1, 3), -2));
    CHECK(io::coeff_from_json(Json::parse("[[1, 3], [2, 5]]")) == GaussQ(mpq_class(1, 3), mpq_class(2, 5)));
    CHECK(io::coeff_from_json(Json::parse("\"1/2+i\"")) == GaussQ(mpq_class(1, 2), 1));
    CHECK_THROWS_AS(io::coeff_from_json(Json::parse("{}")), ParseError);
    CHECK_THROWS_AS(io::coeff_from_json(Json::parse("[[1, 0], 0]")), ParseError);
}

TEST_CASE("symbols") {
    const LaurentSymbol p = io::symbol_from_json(Json::parse(R"({"1": [1, 0], "0": [-0.5, 0]})"));
    CHECK(p == LaurentSymbol::z() - LaurentSymbol(GaussQ(mpq_class(1, 2))));
    CHECK(io::symbol_from_json(io::to_json(p)) == p);
    CHECK_THROWS_AS(io::symbol_from_json(Json::parse(R"({"x": [1, 0]})")), ParseError);
    const MatrixSymbol m = io::matrix_symbol_from_json(Json::parse(R"({"matrix": [[{"1": [1,0]}, {}], [{}, {"-1": [1,0]}]]})"));
    CHECK(m.dim() == 2);
    CHECK(io::matrix_symbol_from_json(io::to_json(m)) == m);
}

TEST_CASE("operators round-trip") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 30; ++trial) {
        const BetOperator t = testing::random_operator(rng, 2, true);
        const BetOperator back = io::operator_from_json(io::parse_json(io::to_json(t).dump()));
        CHECK(same_window(t, back, 12));
    }
    const BetOperator m = assemble_MC(BetOperator::shift(), BetOperator::backward_shift(),
                                      BetOperator::rank_one(ExpPolyVector::unit(0), ExpPolyVector::unit(0)));
    CHECK(same_window(m, io::operator_from_json(io::to_json(m)), 8));
}

TEST_CASE("ball coefficients round-trip exactly") {
    const BetOperator t = BetOperator::toeplitz(LaurentSymbol(std::map<long, GaussQ>{{-2, GaussQ(1)}, {0, GaussQ(mpq_class(-1, 7))}}));
    const KernelData k = kernel_data(t);
    REQUIRE(k.alpha == 2);
    for (const auto& v : k.basis) {
        const ExpPolyVector back = io::vector_from_json(io::parse_json(io::to_json(v).dump()), 1);
        CHECK(io::to_json(back) == io::to_json(v));
        CHECK(t.apply(back).at(0, 3).is_zero() != Tri::no);
    }
}

TEST_CASE("certificates round-trip and still verify") {
    const Completion c = construct_browder_C(BetOperator::shift(), BetOperator::backward_shift());
    const Json j = io::to_json(c.certificate);
    const CompletionCertificate back = io::certificate_from_json(io::parse_json(j.dump(2)));
    CHECK(io::to_json(back) == j);
    CHECK(verify_certificate(back).ok);
}

TEST_CASE("syntax errors carry line and column") {
    try {
        io::parse_json("{\n  \"symbol\": {\"1\": [1, 0],,}\n}");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() > 1);
    }
    CHECK_THROWS_AS(io::operator_from_json(Json::parse("{}")), ParseError);
    CHECK_THROWS_AS(io::operator_from_json(Json::parse(R"({"symbol": {"0": [1, 0]}, "perturbation": [{"u": {}}]})")),
                    ParseError);
    CHECK_THROWS_AS(io::operator_from_json(Json::parse(
                        R"({"symbol": {"0": [1, 0]}, "perturbation": [{"u": {"tails": [{"root": [2, 0], "poly": [[1, 0]]}]}, "v": {"head": [1]}}]})")),
                    ParseError);
}

TEST_CASE("shipped operator files") {
    const std::string dir = BROWDER_DATA_DIR;
    CHECK(io::read_operator_file(dir + "/shift.json").symbol() == MatrixSymbol(LaurentSymbol::z()));
    CHECK(io::read_operator_file(dir + "/backshift.json").symbol() == MatrixSymbol(LaurentSymbol::zinv()));
    const BetOperator nil = io::read_operator_file(dir + "/nilpotent_head.json");
    CHECK(nil.entry(0, 0, 0, 1).exact() == GaussQ(1));
    CHECK(nil.entry(0, 1, 0, 0).exact() == GaussQ(0));
    CHECK(nil.entry(0, 3, 0, 2).exact() == GaussQ(1));
    CHECK_THROWS_AS(io::read_operator_file(dir + "/missing.json"), ParseError);
}
