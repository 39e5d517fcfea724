#include "browder/oracle/suites.hpp"

#include "browder/error.hpp"

#include <algorithm>
#include <sstream>

namespace browder::oracle {

using linalg::RationalMatrix;

namespace {

GaussQ random_entry(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<int> kind(0, 3);
    const mpq_class re(num(rng), den(rng));
    // A quarter of the entries get an imaginary part.
    const mpq_class im = kind(rng) == 0 ? mpq_class(num(rng), den(rng)) : mpq_class(0);
    return GaussQ(re, im);
}

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

RationalMatrix random_full(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_entry(rng);
    return m;
}

struct Tally {
    SuiteReport report;
    void fail(const std::string& what) {
        ++report.failures;
        report.counterexamples.push_back(what);
    }
};

std::string describe(std::initializer_list<std::pair<const char*, const RationalMatrix*>> ms) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, m] : ms) {
        os << (first ? "" : "; ") << name << " = " << m->to_string();
        first = false;
    }
    return os.str();
}

}  // namespace

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t rank) {
    rank = std::min({rank, rows, cols});
    if (rank == 0) return RationalMatrix(rows, cols);
    // A product of random factors has the requested rank with overwhelming probability;
    // retry until it does so the caller's rank is exact.
    for (;;) {
        RationalMatrix m = random_full(rng, rows, rank) * random_full(rng, rank, cols);
        if (linalg::rank(m) == rank) return m;
    }
}

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    const std::size_t full = std::min(rows, cols);
    const std::size_t r = pick(rng, 0, 1) == 0 ? full : pick(rng, 0, full);
    return random_matrix(rng, rows, cols, r);
}

SuiteReport run_six_term(std::size_t trials, std::uint64_t seed) {
    Tally t;
    t.report.suite = "six-term";
    t.report.seed = seed;
    t.report.trials = trials;
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < trials; ++k) {
        const std::size_t x = pick(rng, 1, 8);
        const std::size_t y = pick(rng, 1, 8);
        const std::size_t z = pick(rng, 1, 8);
        const RationalMatrix tm = random_matrix(rng, y, x);
        const RationalMatrix sm = random_matrix(rng, z, y);
        const RationalMatrix st = sm * tm;
        const std::size_t lhs = linalg::nullity(tm) + linalg::nullity(sm) + linalg::corank(st);
        const std::size_t rhs = linalg::nullity(st) + linalg::corank(tm) + linalg::corank(sm);
        if (lhs != rhs)
            t.fail("trial " + std::to_string(k) + ": " + std::to_string(lhs) + " != " + std::to_string(rhs) + "; " +
                   describe({{"T", &tm}, {"S", &sm}}));
    }
    return t.report;
}

namespace {

struct FiniteClass {
    bool invertible;
    bool fredholm;
    bool weyl;
    bool browder;
};

FiniteClass finite_class(const RationalMatrix& m) {
    FiniteClass c{};
    c.invertible = linalg::invertible(m);
    c.fredholm = true;
    c.weyl = m.square();
    if (m.square()) {
        const auto ad = linalg::asc_des(m);
        c.browder = ad.ascent == ad.descent;
    }
    return c;
}

bool two_of_three_holds(bool a, bool b, bool m) { return (a + b + m) != 2; }

}  // namespace

SuiteReport run_two_of_three(std::size_t trials, std::uint64_t seed) {
    Tally t;
    t.report.suite = "two-of-three";
    t.report.seed = seed;
    t.report.trials = trials;
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < trials; ++k) {
        // Square diagonal blocks half of the time so that every class is exercised.
        const bool square = pick(rng, 0, 1) == 0;
        const std::size_t m = pick(rng, 1, 4);
        const std::size_t n = square ? m : pick(rng, 1, 4);
        const std::size_t p = pick(rng, 1, 4);
        const std::size_t q = square ? p : pick(rng, 1, 4);
        const RationalMatrix a = random_matrix(rng, m, n);
        const RationalMatrix b = random_matrix(rng, p, q);
        const RationalMatrix c = random_matrix(rng, m, q);
        const RationalMatrix mc = linalg::assemble_block({{{a, c}, {RationalMatrix(p, n), b}}});
        const FiniteClass ca = finite_class(a);
        const FiniteClass cb = finite_class(b);
        const FiniteClass cm = finite_class(mc);
        std::string broken;
        if (!two_of_three_holds(ca.invertible, cb.invertible, cm.invertible)) broken += " invertible";
        if (!two_of_three_holds(ca.fredholm, cb.fredholm, cm.fredholm)) broken += " fredholm";
        if (!two_of_three_holds(ca.weyl, cb.weyl, cm.weyl)) broken += " weyl";
        if (!two_of_three_holds(ca.browder, cb.browder, cm.browder)) broken += " browder";
        if (!broken.empty())
            t.fail("trial " + std::to_string(k) + ":" + broken + "; " + describe({{"A", &a}, {"B", &b}, {"C", &c}}));
    }
    return t.report;
}

namespace {

RationalMatrix columns(const std::vector<linalg::Vector>& vs, std::size_t rows) {
    RationalMatrix m(rows, vs.size());
    for (std::size_t j = 0; j < vs.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = vs[j][i];
    return m;
}

}  // namespace

SuiteReport run_corner(std::size_t trials, std::uint64_t seed) {
    Tally t;
    t.report.suite = "corner";
    t.report.seed = seed;
    t.report.trials = trials;
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < trials; ++k) {
        const std::size_t m = pick(rng, 1, 5);
        const std::size_t n = pick(rng, 1, m);  // A tends to be injective
        const std::size_t q = pick(rng, 1, 5);
        const std::size_t p = pick(rng, 1, q);  // B tends to be surjective
        const RationalMatrix a = random_matrix(rng, m, n);
        const RationalMatrix b = random_matrix(rng, p, q);
        const RationalMatrix c = random_matrix(rng, m, q);
        const RationalMatrix mc = linalg::assemble_block({{{a, c}, {RationalMatrix(p, n), b}}});
        // C1 in bases K of N(B) and W of N(A^H): W^H C K has the rank of the compression.
        const RationalMatrix kb = columns(linalg::kernel_basis(b), q);
        const RationalMatrix wb = columns(linalg::kernel_basis(a.conjugate_transpose()), m);
        const RationalMatrix c1 = wb.conjugate_transpose() * c * kb;
        const std::size_t r1 = c1.rows() && c1.cols() ? linalg::rank(c1) : 0;
        const bool c1_injective = r1 == c1.cols();
        const bool c1_surjective = r1 == c1.rows();
        const bool left = linalg::injective(a) && c1_injective;
        const bool right = linalg::surjective(b) && c1_surjective;
        const bool inv = linalg::injective(a) && linalg::surjective(b) && c1_injective && c1_surjective;
        std::string broken;
        if (left != linalg::injective(mc)) broken += " left";
        if (right != linalg::surjective(mc)) broken += " right";
        if (inv != linalg::invertible(mc)) broken += " invertible";
        if (!broken.empty())
            t.fail("trial " + std::to_string(k) + ":" + broken + "; " + describe({{"A", &a}, {"B", &b}, {"C", &c}}));
    }
    return t.report;
}

SuiteReport run_suite(std::string_view name, std::size_t trials, std::uint64_t seed) {
    if (name == "six-term") return run_six_term(trials, seed);
    if (name == "two-of-three") return run_two_of_three(trials, seed);
    if (name == "corner") return run_corner(trials, seed);
    throw ParseError("unknown oracle suite '" + std::string(name) + "'");
}

}  // namespace browder::oracle
