#include "browder/io/spec_json.hpp"

#include "browder/error.hpp"

#include <fstream>
#include <sstream>

namespace browder::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

const Json& field(const Json& j, const char* key, const char* where) {
    if (!j.is_object()) bad(std::string(where) + ": expected an object");
    const auto it = j.find(key);
    if (it == j.end()) bad(std::string(where) + ": missing field '" + key + "'");
    return *it;
}

const Json& array_field(const Json& j, const char* key, const char* where) {
    const Json& a = field(j, key, where);
    if (!a.is_array()) bad(std::string(where) + ": field '" + key + "' must be an array");
    return a;
}

std::size_t count_field(const Json& j, const char* key, const char* where) {
    const Json& v = field(j, key, where);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long>() >= 0))
        bad(std::string(where) + ": field '" + key + "' must be a non-negative integer");
    return v.get<std::size_t>();
}

mpq_class rational_from_json(const Json& j) {
    if (j.is_number_integer() || j.is_number_unsigned()) return parse_rational(j.dump());
    // dump() gives the shortest decimal that round-trips, i.e. the literal as written.
    if (j.is_number_float()) return parse_rational(j.dump());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_array() && j.size() == 2) {
        const mpq_class den = rational_from_json(j[1]);
        if (sgn(den) == 0) bad("rational pair with zero denominator");
        mpq_class q = rational_from_json(j[0]) / den;
        q.canonicalize();
        return q;
    }
    bad("expected a rational number, got " + j.dump());
}

mpq_class mpfr_to_q(const BigFloat& x) {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), x.get());
    return q;
}

BigFloat q_to_mpfr(const mpq_class& q, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    BigFloat x(prec);
    mpfr_set_q(x.get(), q.get_mpq_t(), rnd);
    return x;
}

Json ball_json(const Ball& b) {
    Json j;
    j["mid"] = Json::array({rational_to_string(mpfr_to_q(b.mid_re())), rational_to_string(mpfr_to_q(b.mid_im()))});
    j["rad"] = rational_to_string(mpfr_to_q(b.rad()));
    j["prec"] = b.prec();
    return j;
}

Ball ball_from_json(const Json& j) {
    const Json& mid = array_field(j, "mid", "ball");
    if (mid.size() != 2) bad("ball: mid must be [re, im]");
    const long prec = static_cast<long>(count_field(j, "prec", "ball"));
    if (prec < MPFR_PREC_MIN || prec > 1 << 20) bad("ball: precision out of range");
    const mpq_class rad = rational_from_json(field(j, "rad", "ball"));
    if (sgn(rad) < 0) bad("ball: negative radius");
    return Ball(q_to_mpfr(rational_from_json(mid[0]), prec, MPFR_RNDN),
                q_to_mpfr(rational_from_json(mid[1]), prec, MPFR_RNDN), q_to_mpfr(rad, 53, MPFR_RNDU));
}

std::vector<Num> num_list(const Json& j, const char* where) {
    if (!j.is_array()) bad(std::string(where) + ": expected an array");
    std::vector<Num> out;
    for (const auto& e : j) out.push_back(num_from_json(e));
    return out;
}

Json num_list_json(const std::vector<Num>& xs) {
    Json a = Json::array();
    for (const auto& x : xs) a.push_back(to_json(x));
    return a;
}

Root root_from_json(const Json& j) {
    if (j.is_object()) {
        std::vector<GaussQ> coeffs;
        for (const auto& c : array_field(j, "poly", "root")) coeffs.push_back(coeff_from_json(c));
        auto alg = std::make_shared<AlgebraicRoot>();
        alg->poly = Poly(std::move(coeffs));
        alg->enclosure = ball_from_json(field(j, "enclosure", "root"));
        if (!alg->enclosure.inside_unit_disk()) bad("root: tail root must lie inside the unit disk");
        return Root(std::shared_ptr<const AlgebraicRoot>(std::move(alg)));
    }
    const GaussQ r = coeff_from_json(j);
    if (r.is_zero() || r.norm() >= 1) bad("root: tail root must satisfy 0 < |root| < 1");
    return Root(r);
}

Json root_json(const Root& r) {
    if (r.is_exact()) return to_json(r.exact());
    Json j;
    Json poly = Json::array();
    for (const auto& c : r.algebraic().poly.coeffs()) poly.push_back(to_json(c));
    j["poly"] = std::move(poly);
    j["enclosure"] = ball_json(r.algebraic().enclosure);
    return j;
}

Json sequence_json(const Sequence& s) {
    Json j;
    j["head"] = num_list_json(s.head);
    Json tails = Json::array();
    for (const auto& t : s.tails) {
        Json tj;
        tj["root"] = root_json(t.root);
        tj["poly"] = num_list_json(t.poly);
        tails.push_back(std::move(tj));
    }
    j["tails"] = std::move(tails);
    return j;
}

Sequence sequence_from_json(const Json& j) {
    if (!j.is_object()) bad("vector: expected an object");
    Sequence s;
    if (j.contains("head")) s.head = num_list(j["head"], "vector head");
    if (j.contains("tails")) {
        for (const auto& t : array_field(j, "tails", "vector")) {
            s.tails.push_back(Tail{root_from_json(field(t, "root", "tail")), num_list(field(t, "poly", "tail"), "tail poly")});
        }
    }
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "head" && key != "tails") bad("vector: unknown field '" + key + "'");
    }
    return s;
}

Json matrix_rows(const linalg::NumMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        int line = 1;
        int column = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t k = 0; k < stop; ++k) {
            if (text[k] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(column) +
                             ": " + e.what(),
                         line, column);
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_json(ss.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what(), e.line(), e.column());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << j.dump(2) << '\n';
}

GaussQ coeff_from_json(const Json& j) {
    if (j.is_array() && j.size() == 2) {
        // [re, im]; a [num, den] pair is only meaningful as one component.
        return GaussQ(rational_from_json(j[0]), rational_from_json(j[1]));
    }
    if (j.is_number() || j.is_string()) {
        if (j.is_string()) return parse_gauss(j.get<std::string>());
        return GaussQ(rational_from_json(j));
    }
    bad("expected a coefficient [re, im], got " + j.dump());
}

Json to_json(const GaussQ& q) { return Json::array({rational_to_string(q.re()), rational_to_string(q.im())}); }

Num num_from_json(const Json& j) {
    if (j.is_object()) return Num(ball_from_json(j));
    return Num(coeff_from_json(j));
}

Json to_json(const Num& x) { return x.is_exact() ? to_json(x.exact()) : ball_json(x.ball(x.prec())); }

LaurentSymbol symbol_from_json(const Json& j) {
    if (!j.is_object()) bad("symbol: expected an object mapping exponents to coefficients");
    std::map<long, GaussQ> terms;
    for (const auto& [key, value] : j.items()) {
        std::size_t used = 0;
        long e = 0;
        try {
            e = std::stol(key, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != key.size() || key.empty()) bad("symbol: exponent key '" + key + "' is not an integer");
        terms[e] += coeff_from_json(value);
    }
    return LaurentSymbol(terms);
}

Json to_json(const LaurentSymbol& p) {
    Json j = Json::object();
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        if (p.coeffs()[k].is_zero()) continue;
        j[std::to_string(p.low() + static_cast<long>(k))] = to_json(p.coeffs()[k]);
    }
    return j;
}

MatrixSymbol matrix_symbol_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("matrix")) return MatrixSymbol(symbol_from_json(j));
    const Json& rows = array_field(j, "matrix", "matrix symbol");
    const std::size_t dim = rows.size();
    if (dim != 1 && dim != 2) bad("matrix symbol: dimension must be 1 or 2");
    MatrixSymbol m(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        if (!rows[r].is_array() || rows[r].size() != dim) bad("matrix symbol: rows must be square");
        for (std::size_t c = 0; c < dim; ++c) m(r, c) = symbol_from_json(rows[r][c]);
    }
    return m;
}

Json to_json(const MatrixSymbol& p) {
    if (p.dim() == 1) return to_json(p(0, 0));
    Json rows = Json::array();
    for (std::size_t r = 0; r < p.dim(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < p.dim(); ++c) row.push_back(to_json(p(r, c)));
        rows.push_back(std::move(row));
    }
    Json j;
    j["matrix"] = std::move(rows);
    return j;
}

ExpPolyVector vector_from_json(const Json& j, std::size_t dim) {
    ExpPolyVector v(dim);
    if (j.is_object() && j.contains("components")) {
        const Json& comps = array_field(j, "components", "vector");
        if (comps.size() != dim) bad("vector: expected " + std::to_string(dim) + " components");
        for (std::size_t c = 0; c < dim; ++c) v.comp(c) = sequence_from_json(comps[c]);
    } else {
        if (dim != 1) bad("vector: a two-component operator needs {\"components\": [v0, v1]}");
        v.comp(0) = sequence_from_json(j);
    }
    return v;
}

Json to_json(const ExpPolyVector& v) {
    if (v.dim() == 1) return sequence_json(v.comp(0));
    Json comps = Json::array();
    for (std::size_t c = 0; c < v.dim(); ++c) comps.push_back(sequence_json(v.comp(c)));
    Json j;
    j["components"] = std::move(comps);
    return j;
}

BetOperator operator_from_json(const Json& j) {
    MatrixSymbol sym = matrix_symbol_from_json(field(j, "symbol", "operator"));
    std::vector<RankOne> terms;
    if (j.contains("perturbation")) {
        for (const auto& t : array_field(j, "perturbation", "operator"))
            terms.push_back(RankOne{vector_from_json(field(t, "u", "perturbation term"), sym.dim()),
                                    vector_from_json(field(t, "v", "perturbation term"), sym.dim())});
    }
    return BetOperator(std::move(sym), std::move(terms));
}

Json to_json(const BetOperator& t) {
    Json j;
    j["symbol"] = to_json(t.symbol());
    Json terms = Json::array();
    for (const auto& r : t.perturbation()) {
        Json tj;
        tj["u"] = to_json(r.u);
        tj["v"] = to_json(r.v);
        terms.push_back(std::move(tj));
    }
    j["perturbation"] = std::move(terms);
    return j;
}

BetOperator read_operator_file(const std::string& path) {
    const Json j = read_json_file(path);
    try {
        return operator_from_json(j);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what(), e.line(), e.column());
    }
}

Json to_json(const linalg::NumMatrix& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["entries"] = matrix_rows(m);
    return j;
}

linalg::NumMatrix matrix_from_json(const Json& j) {
    const std::size_t rows = count_field(j, "rows", "matrix");
    const std::size_t cols = count_field(j, "cols", "matrix");
    const Json& entries = array_field(j, "entries", "matrix");
    if (entries.size() != rows) bad("matrix: row count mismatch");
    linalg::NumMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!entries[r].is_array() || entries[r].size() != cols) bad("matrix: column count mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = num_from_json(entries[r][c]);
    }
    return m;
}

Json to_json(const ExtNat& x) {
    if (x.is_finite()) return x.value();
    return x.to_string();
}

ExtNat extnat_from_json(const Json& j) {
    if (j.is_number_unsigned() || (j.is_number_integer() && j.get<long>() >= 0))
        return ExtNat::finite(j.get<std::size_t>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "inf") return ExtNat::infinite();
        const std::string prefix = "exceeds_cap(";
        if (s.rfind(prefix, 0) == 0 && s.back() == ')')
            return ExtNat::exceeds_cap(std::stoul(s.substr(prefix.size(), s.size() - prefix.size() - 1)));
    }
    bad("expected a count, \"inf\" or \"exceeds_cap(n)\", got " + j.dump());
}

namespace {

Json vector_list(const std::vector<ExpPolyVector>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(to_json(v));
    return a;
}

std::vector<ExpPolyVector> vector_list_from_json(const Json& j) {
    if (!j.is_array()) bad("expected a list of vectors");
    std::vector<ExpPolyVector> out;
    for (const auto& v : j) out.push_back(vector_from_json(v, 1));
    return out;
}

}  // namespace

Json to_json(const CompletionCertificate& cert) {
    Json j;
    j["kind"] = cert.kind == CertificateKind::browder ? "browder" : "invertible_C";
    j["A"] = to_json(cert.a);
    j["B"] = to_json(cert.b);
    j["C"] = to_json(cert.c);
    Json left;
    left["p"] = cert.left.p;
    left["x1_dim"] = cert.left.x1_basis.size();
    left["x1_basis"] = vector_list(cert.left.x1_basis);
    left["a1"] = to_json(cert.left.a1);
    left["nilpotency_degree"] = cert.left.nilpotency_degree;
    j["left"] = std::move(left);
    Json right;
    right["q"] = cert.right.q;
    right["complement_dim"] = cert.right.complement_basis.size();
    right["complement_basis"] = vector_list(cert.right.complement_basis);
    right["b2_adjoint"] = to_json(cert.right.b2_adjoint);
    right["nilpotency_degree"] = cert.right.nilpotency_degree;
    j["right"] = std::move(right);
    j["corner"] = to_json(cert.corner);
    Json checks = Json::array();
    for (const auto& c : cert.dimension_checks) {
        Json cj;
        cj["name"] = c.name;
        cj["lhs"] = to_json(c.lhs);
        cj["rhs"] = to_json(c.rhs);
        cj["holds"] = c.holds;
        checks.push_back(std::move(cj));
    }
    j["dimension_checks"] = std::move(checks);
    return j;
}

CompletionCertificate certificate_from_json(const Json& j) {
    CompletionCertificate cert;
    const Json& kind = field(j, "kind", "certificate");
    if (kind == "browder")
        cert.kind = CertificateKind::browder;
    else if (kind == "invertible_C")
        cert.kind = CertificateKind::invertible_C;
    else
        bad("certificate: unknown kind " + kind.dump());
    cert.a = operator_from_json(field(j, "A", "certificate"));
    cert.b = operator_from_json(field(j, "B", "certificate"));
    cert.c = operator_from_json(field(j, "C", "certificate"));
    const Json& left = field(j, "left", "certificate");
    cert.left.p = count_field(left, "p", "left decomposition");
    cert.left.x1_basis = vector_list_from_json(field(left, "x1_basis", "left decomposition"));
    cert.left.a1 = matrix_from_json(field(left, "a1", "left decomposition"));
    cert.left.nilpotency_degree = count_field(left, "nilpotency_degree", "left decomposition");
    const Json& right = field(j, "right", "certificate");
    cert.right.q = count_field(right, "q", "right decomposition");
    cert.right.complement_basis = vector_list_from_json(field(right, "complement_basis", "right decomposition"));
    cert.right.b2_adjoint = matrix_from_json(field(right, "b2_adjoint", "right decomposition"));
    cert.right.nilpotency_degree = count_field(right, "nilpotency_degree", "right decomposition");
    cert.corner = matrix_from_json(field(j, "corner", "certificate"));
    for (const auto& c : array_field(j, "dimension_checks", "certificate")) {
        const Json& name = field(c, "name", "dimension check");
        const Json& holds = field(c, "holds", "dimension check");
        if (!name.is_string() || !holds.is_boolean()) bad("dimension check: malformed entry");
        cert.dimension_checks.push_back(DimensionCheck{name.get<std::string>(), extnat_from_json(field(c, "lhs", "dimension check")),
                                                       extnat_from_json(field(c, "rhs", "dimension check")),
                                                       holds.get<bool>()});
    }
    return cert;
}

Json report_json(const GaussQ& lambda, const FredholmData& fd, const OperatorClass& cls) {
    Json j;
    j["lambda"] = to_json(lambda);
    Json f;
    f["semi_fredholm"] = fd.semi_fredholm;
    f["degenerate_symbol"] = fd.degenerate_symbol;
    f["alpha"] = to_json(fd.alpha);
    f["beta"] = to_json(fd.beta);
    if (fd.index)
        f["index"] = *fd.index;
    else
        f["index"] = nullptr;
    f["ascent"] = to_json(fd.ascent);
    f["descent"] = to_json(fd.descent);
    if (fd.kernel_basis_available) f["kernel_basis"] = vector_list(fd.kernel_basis);
    j["fredholm"] = std::move(f);
    Json c;
    for (const auto& [name, value] : cls.flags()) c[name] = std::string(to_string(value));
    j["class"] = std::move(c);
    return j;
}

}  // namespace browder::io
