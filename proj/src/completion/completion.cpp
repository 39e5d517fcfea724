#include "browder/completion/completion.hpp"

#include "browder/error.hpp"

#include <algorithm>
#include <string>

namespace browder {

using linalg::NumMatrix;

OperatorData operator_data(const BetOperator& t, std::size_t cap, const PrecisionPolicy& policy) {
    OperatorData d;
    d.fredholm = fredholm_data(t, cap, policy);
    d.cls = classify_from(d.fredholm);
    return d;
}

namespace {

std::string sum_string(const ExtNat& x, const ExtNat& y) { return x.to_string() + "+" + y.to_string(); }

void clause(Existence& e, Tri value, const std::string& failed, const std::string& unknown) {
    if (value == Tri::no) e.reasons.push_back(failed);
    if (value == Tri::undecided) e.reasons.push_back(unknown);
}

}  // namespace

Existence exists_completion(const OperatorData& a, const OperatorData& b, CompletionKind kind) {
    Existence e;
    const FredholmData& fa = a.fredholm;
    const FredholmData& fb = b.fredholm;
    Tri left = Tri::undecided;
    Tri right = Tri::undecided;
    Tri dims = Tri::undecided;
    std::string left_name;
    std::string right_name;
    std::string dims_text;
    switch (kind) {
        case CompletionKind::invertible:
            left = a.cls.left_invertible;
            right = b.cls.right_invertible;
            left_name = "left invertible";
            right_name = "right invertible";
            dims = ext_equal(fa.beta, fb.alpha);
            dims_text = "beta(A) = " + fa.beta.to_string() + " vs alpha(B) = " + fb.alpha.to_string();
            break;
        case CompletionKind::weyl:
        case CompletionKind::browder: {
            const bool weyl = kind == CompletionKind::weyl;
            left = weyl ? a.cls.left_semi_fredholm : a.cls.left_semi_browder;
            right = weyl ? b.cls.right_semi_fredholm : b.cls.right_semi_browder;
            left_name = weyl ? "left semi-Fredholm" : "left semi-Browder";
            right_name = weyl ? "right semi-Fredholm" : "right semi-Browder";
            const ExtNat lhs = fa.alpha + fb.alpha;
            const ExtNat rhs = fa.beta + fb.beta;
            dims = ext_equal(lhs, rhs);
            dims_text = "alpha(A)+alpha(B) = " + sum_string(fa.alpha, fb.alpha) + " = " + lhs.to_string() +
                        " vs beta(A)+beta(B) = " + sum_string(fa.beta, fb.beta) + " = " + rhs.to_string();
            break;
        }
    }
    clause(e, left, "A is not " + left_name, "A " + left_name + " undecided");
    clause(e, right, "B is not " + right_name, "B " + right_name + " undecided");
    clause(e, dims, "condition (c) fails: " + dims_text, "condition (c) undecided: " + dims_text);
    e.answer = left && right && dims;
    return e;
}

namespace {

ExpPolyVector combine(const std::vector<ExpPolyVector>& vs, const std::vector<Num>& coeffs, std::size_t dim) {
    ExpPolyVector out(dim);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (coeffs[i].is_exact_zero()) continue;
        out = out + coeffs[i] * vs[i];
    }
    return out.normalized();
}

/// gram(i, j) = <v_j, v_i>: column j of gram * c gives <sum c_j v_j, v_i>.
NumMatrix gram(const std::vector<ExpPolyVector>& vs) {
    NumMatrix g(vs.size(), vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < vs.size(); ++j) g(i, j) = j < i ? g(j, i).conj() : inner(vs[j], vs[i]);
    return g;
}

/// Coordinates in `basis` of the orthogonal projection of x onto its span.
std::vector<Num> coordinates(const ExpPolyVector& x, const std::vector<ExpPolyVector>& basis, const NumMatrix& g) {
    std::vector<Num> rhs(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) rhs[i] = inner(x, basis[i]);
    return linalg::solve(g, rhs);
}

ExpPolyVector project_out(const ExpPolyVector& x, const std::vector<ExpPolyVector>& basis, const NumMatrix& g) {
    if (basis.empty()) return x;
    return (x - combine(basis, coordinates(x, basis, g), x.dim())).normalized();
}

/// h_j with <v_i, h_j> = delta_ij inside span(v).
std::vector<ExpPolyVector> dual_basis(const std::vector<ExpPolyVector>& vs) {
    if (vs.empty()) return {};
    const NumMatrix k = gram(vs).conjugate_transpose();  // k(i, l) = <v_i, v_l>
    const NumMatrix kinv = linalg::inverse(k);
    std::vector<ExpPolyVector> out;
    for (std::size_t j = 0; j < vs.size(); ++j) {
        std::vector<Num> c(vs.size());
        for (std::size_t l = 0; l < vs.size(); ++l) c[l] = kinv(l, j).conj();
        out.push_back(combine(vs, c, vs[0].dim()));
    }
    return out;
}

/// Matrix of t restricted to an invariant span, in the basis coordinates.
NumMatrix restricted_matrix(const BetOperator& t, const std::vector<ExpPolyVector>& basis) {
    NumMatrix m(basis.size(), basis.size());
    if (basis.empty()) return m;
    const NumMatrix g = gram(basis);
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const auto c = coordinates(t.apply(basis[j]), basis, g);
        for (std::size_t i = 0; i < basis.size(); ++i) m(i, j) = c[i];
    }
    return m;
}

Tri matrix_is_zero(const NumMatrix& m) {
    Tri z = Tri::yes;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) z = z && m(i, j).is_zero();
    return z;
}

/// Least k with m^k = 0; throws PrecisionExhausted if a power cannot be decided.
std::size_t nilpotency_degree(const NumMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 0;
    NumMatrix power = m;
    for (std::size_t k = 1; k <= n; ++k) {
        const Tri z = matrix_is_zero(power);
        if (z == Tri::yes) return k;
        if (z == Tri::undecided) throw PrecisionExhausted("nilpotency: power not certified zero or nonzero");
        power = power * m;
    }
    throw DimensionCheckFailed("nilpotency: restricted matrix is not nilpotent");
}

/// Vectors spanning {sum c_i w_i : sum c_i w_i orthogonal to every vector of `against`}.
std::vector<ExpPolyVector> orthogonal_part(const std::vector<ExpPolyVector>& ws,
                                           const std::vector<ExpPolyVector>& against, std::size_t dim) {
    if (ws.empty() || against.empty()) return ws;
    NumMatrix m(against.size(), ws.size());
    for (std::size_t i = 0; i < against.size(); ++i)
        for (std::size_t j = 0; j < ws.size(); ++j) m(i, j) = inner(ws[j], against[i]);
    const auto r = linalg::certified_rank(m);
    if (!r.decided()) throw PrecisionExhausted("orthogonal part: rank not certified");
    std::vector<ExpPolyVector> out;
    for (const auto& c : r.null_basis) out.push_back(combine(ws, c, dim));
    return out;
}

/// Indices of a maximal independent subset of vs.
std::vector<std::size_t> independent_subset(const std::vector<ExpPolyVector>& vs) {
    if (vs.empty()) return {};
    const auto r = linalg::certified_rank(gram(vs));
    if (!r.decided()) throw PrecisionExhausted("independent subset: rank not certified");
    auto cols = r.pivot_cols;
    std::sort(cols.begin(), cols.end());
    return cols;
}

/// corner(i, j): coordinate i of the projection of c(from_j) onto span(to).
NumMatrix compress(const BetOperator& c, const std::vector<ExpPolyVector>& from, const std::vector<ExpPolyVector>& to) {
    NumMatrix m(to.size(), from.size());
    if (to.empty() || from.empty()) return m;
    const NumMatrix g = gram(to);
    for (std::size_t j = 0; j < from.size(); ++j) {
        const auto coords = coordinates(c.apply(from[j]), to, g);
        for (std::size_t i = 0; i < to.size(); ++i) m(i, j) = coords[i];
    }
    return m;
}

Tri certified_invertible(const NumMatrix& m) {
    if (m.rows() != m.cols()) return Tri::no;
    const auto r = linalg::certified_rank(m);
    if (r.rank_lo == m.rows()) return Tri::yes;
    if (r.rank_hi < m.rows()) return Tri::no;
    return Tri::undecided;
}

Tri certified_injective(const NumMatrix& m) {
    const auto r = linalg::certified_rank(m);
    if (r.rank_lo == m.cols()) return Tri::yes;
    if (r.rank_hi < m.cols()) return Tri::no;
    return Tri::undecided;
}

Tri certified_surjective(const NumMatrix& m) {
    const auto r = linalg::certified_rank(m);
    if (r.rank_lo == m.rows()) return Tri::yes;
    if (r.rank_hi < m.rows()) return Tri::no;
    return Tri::undecided;
}

/// Bases of N(B1) and R(A2)^perp together with the decompositions.
struct CornerSpaces {
    LeftDecomposition left;
    RightDecomposition right;
    std::vector<ExpPolyVector> n1;  // N(B) orthogonal to N((B*)^q)
    std::vector<ExpPolyVector> v;   // N(A*) orthogonal to N(A^p)
    FredholmData fa;
    FredholmData fb;
};

CornerSpaces corner_spaces(const BetOperator& a, const BetOperator& b, std::size_t cap, const PrecisionPolicy& policy) {
    CornerSpaces s;
    s.left = left_decompose(a, cap, policy);
    s.right = right_decompose(b, cap, policy);
    s.fa = fredholm_data(a, cap, policy);
    s.fb = fredholm_data(b, cap, policy);
    const auto a_coker = kernel_data(bet_adjoint(a), policy).basis;
    const auto b_ker = kernel_data(b, policy).basis;
    s.v = orthogonal_part(a_coker, s.left.x1_basis, 1);
    s.n1 = orthogonal_part(b_ker, s.right.complement_basis, 1);
    return s;
}

std::vector<DimensionCheck> dimension_checks(const CornerSpaces& s, CertificateKind kind) {
    std::vector<DimensionCheck> out;
    auto add = [&](std::string name, ExtNat lhs, ExtNat rhs) {
        const bool holds = ext_equal(lhs, rhs) == Tri::yes;
        out.push_back(DimensionCheck{std::move(name), lhs, rhs, holds});
    };
    const ExtNat dim_v = ExtNat::finite(s.v.size());
    const ExtNat dim_n1 = ExtNat::finite(s.n1.size());
    add("beta(A) = dim R(A2)^perp + alpha(A)", s.fa.beta, dim_v + s.fa.alpha);
    add("dim N(B1) + beta(B) = alpha(B)", dim_n1 + s.fb.beta, s.fb.alpha);
    add("dim N(B1) = dim R(A2)^perp", dim_n1, dim_v);
    if (kind == CertificateKind::invertible_C) {
        add("alpha(B1) = beta(A2)", dim_n1, dim_v);
        // Both infinite-dimensional complements are matched by the identity part of C.
        add("dim N(B1)^perp + dim K2 = dim R(A2) + dim H1", ExtNat::infinite(), ExtNat::infinite());
    }
    return out;
}

void require_completion(const BetOperator& a, const BetOperator& b, std::size_t cap, const PrecisionPolicy& policy) {
    const Existence e = exists_completion(operator_data(a, cap, policy), operator_data(b, cap, policy),
                                          CompletionKind::browder);
    if (e.answer == Tri::yes) return;
    std::string msg;
    for (const auto& r : e.reasons) msg += (msg.empty() ? "" : "; ") + r;
    throw PreconditionFailed(msg.empty() ? "completion undecided" : msg);
}

void check_dimensions(const std::vector<DimensionCheck>& checks) {
    for (const auto& c : checks)
        if (!c.holds)
            throw DimensionCheckFailed("dimension identity fails: " + c.name + " (" + c.lhs.to_string() +
                                       " vs " + c.rhs.to_string() + ")");
}

BetOperator finite_rank(MatrixSymbol symbol, const std::vector<ExpPolyVector>& us,
                        const std::vector<ExpPolyVector>& vs) {
    std::vector<RankOne> terms;
    for (std::size_t i = 0; i < us.size(); ++i)
        if (us[i].is_zero() != Tri::yes) terms.push_back(RankOne{us[i], vs[i]});
    return BetOperator(std::move(symbol), normalize_terms(terms, 1));
}

}  // namespace

LeftDecomposition left_decompose(const BetOperator& a, std::size_t cap, const PrecisionPolicy& policy) {
    const FredholmData fd = fredholm_data(a, cap, policy);
    const OperatorClass cls = classify_from(fd);
    if (cls.left_semi_browder != Tri::yes)
        throw NotLeftSemiBrowder("A is not left semi-Browder (ascent " + fd.ascent.to_string() + ")");
    LeftDecomposition d;
    d.p = fd.ascent.value();
    if (d.p > 0) d.x1_basis = kernel_data(bet_power(a, d.p), policy).basis;
    d.a1 = restricted_matrix(a, d.x1_basis);
    d.nilpotency_degree = nilpotency_degree(d.a1);
    return d;
}

RightDecomposition right_decompose(const BetOperator& b, std::size_t cap, const PrecisionPolicy& policy) {
    const FredholmData fd = fredholm_data(b, cap, policy);
    const OperatorClass cls = classify_from(fd);
    if (cls.right_semi_browder != Tri::yes)
        throw NotRightSemiBrowder("B is not right semi-Browder (descent " + fd.descent.to_string() + ")");
    RightDecomposition d;
    d.q = fd.descent.value();
    const BetOperator adj = bet_adjoint(b);
    if (d.q > 0) d.complement_basis = kernel_data(bet_power(adj, d.q), policy).basis;
    d.b2_adjoint = restricted_matrix(adj, d.complement_basis);
    d.nilpotency_degree = nilpotency_degree(d.b2_adjoint);
    return d;
}

Completion construct_browder_C(const BetOperator& a, const BetOperator& b, std::size_t cap,
                               const PrecisionPolicy& policy) {
    require_completion(a, b, cap, policy);
    CornerSpaces s = corner_spaces(a, b, cap, policy);
    auto checks = dimension_checks(s, CertificateKind::browder);
    check_dimensions(checks);
    // C g_i = f_i on N(B1), zero on its orthogonal complement.
    const auto h = dual_basis(s.n1);
    BetOperator c = finite_rank(MatrixSymbol(1), s.v, h);
    CompletionCertificate cert;
    cert.kind = CertificateKind::browder;
    cert.a = a;
    cert.b = b;
    cert.c = c;
    cert.corner = compress(c, s.n1, s.v);
    cert.left = std::move(s.left);
    cert.right = std::move(s.right);
    cert.dimension_checks = std::move(checks);
    return Completion{std::move(c), std::move(cert)};
}

Completion construct_invertible_C(const BetOperator& a, const BetOperator& b, std::size_t cap,
                                  const PrecisionPolicy& policy) {
    require_completion(a, b, cap, policy);
    CornerSpaces s = corner_spaces(a, b, cap, policy);
    auto checks = dimension_checks(s, CertificateKind::invertible_C);
    check_dimensions(checks);
    const auto& g = s.n1;
    const auto& f = s.v;
    // E = N(B1) + R(A2)^perp. C maps N(B1) onto R(A2)^perp, the rest of E onto the rest of E,
    // and is the identity on the orthogonal complement of E.
    std::vector<ExpPolyVector> r;
    std::vector<ExpPolyVector> sv;
    if (!g.empty()) {
        const NumMatrix gg = gram(g);
        const NumMatrix gf = gram(f);
        for (const auto& fi : f) r.push_back(project_out(fi, g, gg));
        for (const auto& gi : g) sv.push_back(project_out(gi, f, gf));
    }
    const auto r_idx = independent_subset(r);
    const auto s_idx = independent_subset(sv);
    if (r_idx.size() != s_idx.size())
        throw DimensionCheckFailed("invertible completion: complements inside N(B1) + R(A2)^perp differ");
    std::vector<ExpPolyVector> basis = g;
    std::vector<ExpPolyVector> images = f;
    for (std::size_t t = 0; t < r_idx.size(); ++t) {
        basis.push_back(r[r_idx[t]]);
        images.push_back(sv[s_idx[t]]);
    }
    std::vector<ExpPolyVector> defects;
    for (std::size_t j = 0; j < basis.size(); ++j) defects.push_back((images[j] - basis[j]).normalized());
    BetOperator c = finite_rank(MatrixSymbol::identity(1), defects, dual_basis(basis));
    CompletionCertificate cert;
    cert.kind = CertificateKind::invertible_C;
    cert.a = a;
    cert.b = b;
    cert.c = c;
    cert.corner = compress(c, s.n1, s.v);
    cert.left = std::move(s.left);
    cert.right = std::move(s.right);
    cert.dimension_checks = std::move(checks);
    return Completion{std::move(c), std::move(cert)};
}

CornerResult corner_tests(const BetOperator& a, const BetOperator& b, const BetOperator& c, std::size_t cap,
                          const PrecisionPolicy& policy) {
    CornerResult out;
    const FredholmData fa = fredholm_data(a, cap, policy);
    const FredholmData fb = fredholm_data(b, cap, policy);
    const OperatorClass ca = classify_from(fa);
    const OperatorClass cb = classify_from(fb);
    const bool corner_available = fa.semi_fredholm && fb.semi_fredholm;
    Tri c1_injective = Tri::undecided;
    Tri c1_surjective = Tri::undecided;
    Tri c1_invertible = Tri::undecided;
    if (corner_available) {
        const auto b_ker = kernel_data(b, policy).basis;
        const auto a_coker = kernel_data(bet_adjoint(a), policy).basis;
        out.c1 = compress(c, b_ker, a_coker);
        c1_injective = certified_injective(out.c1);
        c1_surjective = certified_surjective(out.c1);
        c1_invertible = certified_invertible(out.c1);
    } else {
        out.notes.push_back("corner not formed: A or B has a non-closed range");
    }
    // The left test needs R(B) closed; the right test needs R(A) closed.
    if (ca.left_invertible == Tri::no)
        out.left_invertible = Tri::no;
    else if (!fb.semi_fredholm) {
        out.left_invertible = Tri::undecided;
        out.notes.push_back("left test: R(B) not closed");
    } else
        out.left_invertible = ca.left_invertible && c1_injective;
    if (cb.right_invertible == Tri::no)
        out.right_invertible = Tri::no;
    else if (!fa.semi_fredholm) {
        out.right_invertible = Tri::undecided;
        out.notes.push_back("right test: R(A) not closed");
    } else
        out.right_invertible = cb.right_invertible && c1_surjective;
    if (ca.left_invertible == Tri::no || cb.right_invertible == Tri::no)
        out.invertible = Tri::no;
    else
        out.invertible = ca.left_invertible && cb.right_invertible && c1_invertible;
    return out;
}

namespace {

bool same_matrix(const NumMatrix& x, const NumMatrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) {
            if (x(i, j).is_exact() && y(i, j).is_exact()) {
                if (!(x(i, j).exact() == y(i, j).exact())) return false;
            } else if ((x(i, j) - y(i, j)).is_zero() == Tri::no) {
                return false;
            }
        }
    return true;
}

}  // namespace

Verification verify_certificate(const CompletionCertificate& cert, std::size_t cap, const PrecisionPolicy& policy) {
    Verification v;
    auto fail = [&](std::string reason) { v.reasons.push_back(std::move(reason)); };
    try {
        const FredholmData fa = fredholm_data(cert.a, cap, policy);
        const FredholmData fb = fredholm_data(cert.b, cap, policy);
        if (ext_finite(fa.ascent) != Tri::yes) fail("asc(A) not finite: " + fa.ascent.to_string());
        if (ext_finite(fb.descent) != Tri::yes) fail("des(B) not finite: " + fb.descent.to_string());
        if (!v.reasons.empty()) return v;

        CornerSpaces s = corner_spaces(cert.a, cert.b, cap, policy);
        if (s.left.p != cert.left.p) fail("recorded p differs from asc(A)");
        if (s.right.q != cert.right.q) fail("recorded q differs from des(B)");
        if (cert.left.a1.rows() != s.left.x1_basis.size()) fail("nilpotency: A1 has the wrong size");
        else {
            try {
                const std::size_t k = nilpotency_degree(cert.left.a1);
                if (k != cert.left.nilpotency_degree || k != s.left.p)
                    fail("nilpotency: degree of A1 is " + std::to_string(k) + ", recorded " +
                         std::to_string(cert.left.nilpotency_degree));
            } catch (const DimensionCheckFailed&) {
                fail("nilpotency: A1 is not nilpotent");
            }
        }
        if (cert.right.b2_adjoint.rows() != s.right.complement_basis.size()) fail("nilpotency: B2 has the wrong size");
        else {
            try {
                const std::size_t k = nilpotency_degree(cert.right.b2_adjoint);
                if (k != cert.right.nilpotency_degree || k != s.right.q)
                    fail("nilpotency: degree of B2 is " + std::to_string(k) + ", recorded " +
                         std::to_string(cert.right.nilpotency_degree));
            } catch (const DimensionCheckFailed&) {
                fail("nilpotency: B2 is not nilpotent");
            }
        }
        if (!same_matrix(cert.left.a1, s.left.a1)) fail("nilpotency: A1 differs from the recomputed restriction");
        if (!same_matrix(cert.right.b2_adjoint, s.right.b2_adjoint))
            fail("nilpotency: B2 differs from the recomputed restriction");

        for (const auto& c : dimension_checks(s, cert.kind))
            if (!c.holds) fail("dimension identity fails: " + c.name);
        if (cert.dimension_checks.size() != dimension_checks(s, cert.kind).size())
            fail("recorded dimension checks incomplete");
        for (const auto& c : cert.dimension_checks)
            if (!c.holds || ext_equal(c.lhs, c.rhs) != Tri::yes) fail("recorded dimension identity fails: " + c.name);

        if (certified_invertible(cert.corner) != Tri::yes) fail("corner not invertible");
        const NumMatrix corner = compress(cert.c, s.n1, s.v);
        if (certified_invertible(corner) != Tri::yes) fail("corner not invertible for the recorded C");
        else if (!same_matrix(corner, cert.corner)) fail("corner differs from the recomputed compression");

        if (cert.kind == CertificateKind::invertible_C) {
            const Tri inv = classify(cert.c, cap, policy).invertible;
            if (inv != Tri::yes) fail("C not certified invertible (" + std::string(to_string(inv)) + ")");
        }
        if (v.reasons.empty()) {
            const Tri direct = classify(assemble_MC(cert.a, cert.b, cert.c), cap, policy).browder;
            if (direct == Tri::no) fail("direct classification: M_C is not Browder");
        }
    } catch (const PreconditionFailed& e) {
        fail(std::string("precondition: ") + e.what());
    } catch (const Error& e) {
        fail(std::string("could not re-derive: ") + e.what());
    }
    v.ok = v.reasons.empty();
    return v;
}

}  // namespace browder
