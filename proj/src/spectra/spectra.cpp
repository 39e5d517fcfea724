#include "browder/spectra/spectra.hpp"

#include "browder/classify/classify.hpp"
#include "browder/completion/completion.hpp"
#include "browder/error.hpp"

#include <exception>
#include <optional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace browder {

ScanMode parse_scan_mode(std::string_view text) {
    if (text == "all_C") return ScanMode::all_C;
    if (text == "fredholm_C") return ScanMode::fredholm_C;
    if (text == "invertible_C") return ScanMode::invertible_C;
    throw ParseError("unknown scan mode '" + std::string(text) + "'");
}

std::string_view to_string(ScanMode mode) {
    switch (mode) {
        case ScanMode::all_C: return "all_C";
        case ScanMode::fredholm_C: return "fredholm_C";
        default: return "invertible_C";
    }
}

std::string_view to_string(WitnessState state) {
    switch (state) {
        case WitnessState::none: return "none";
        case WitnessState::verified: return "verified";
        case WitnessState::failed: return "failed";
        default: return "skipped";
    }
}

namespace {

std::optional<FredholmData> try_fredholm(const BetOperator& t, const PointOptions& options) {
    try {
        return fredholm_data(t, options.cap, options.policy);
    } catch (const PrecisionExhausted&) {
        return std::nullopt;
    }
}

WitnessState build_witness(const BetOperator& a, const BetOperator& b, ScanMode mode, const PointOptions& options) {
    try {
        const Completion c = mode == ScanMode::all_C ? construct_browder_C(a, b, options.cap, options.policy)
                                                     : construct_invertible_C(a, b, options.cap, options.policy);
        return verify_certificate(c.certificate, options.cap, options.policy).ok ? WitnessState::verified
                                                                                  : WitnessState::failed;
    } catch (const PrecisionExhausted&) {
        return WitnessState::skipped;
    } catch (const Error&) {
        return WitnessState::failed;
    }
}

}  // namespace

PointVerdict classify_point(const BetOperator& a, const BetOperator& b, const GaussQ& lambda, ScanMode mode,
                            const PointOptions& options) {
    PointVerdict v;
    v.lambda = lambda;
    const BetOperator al = translate(a, lambda);
    const BetOperator bl = translate(b, lambda);
    const auto fa = try_fredholm(al, options);
    const auto fb = try_fredholm(bl, options);
    if (fa) v.in_sigma_lb_A = !classify_from(*fa).left_semi_browder;
    if (fb) v.in_sigma_rb_B = !classify_from(*fb).right_semi_browder;
    if (fa && fb) v.index_condition_fails = !ext_equal(fa->alpha + fb->alpha, fa->beta + fb->beta);
    // The three intersections over C coincide, so the verdict does not depend on the mode.
    v.in_SPR = v.in_sigma_lb_A || v.in_sigma_rb_B || v.index_condition_fails;
    if (options.build_witness && v.in_SPR == Tri::no) v.witness = build_witness(al, bl, mode, options);
    return v;
}

Region parse_region(std::string_view text) {
    std::vector<mpq_class> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string_view piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        try {
            parts.push_back(parse_rational(piece));
        } catch (const ParseError& e) {
            throw ParseError("region: " + std::string(e.what()), 1, static_cast<int>(start) + 1);
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (parts.size() != 4) throw ParseError("region: expected re0,re1,im0,im1", 1, 1);
    Region r{parts[0], parts[1], parts[2], parts[3]};
    if (r.re_min > r.re_max || r.im_min > r.im_max) throw ParseError("region: empty rectangle", 1, 1);
    return r;
}

GaussQ SpectralGrid::point(std::size_t row, std::size_t col) const {
    return GaussQ(region.re_min + step * mpq_class(col), region.im_min + step * mpq_class(row));
}

std::size_t SpectralGrid::count(Tri in_spr) const {
    std::size_t n = 0;
    for (const auto& v : verdicts) n += v.in_SPR == in_spr;
    return n;
}

SpectralGrid make_grid(const Region& region, const mpq_class& step, ScanMode mode) {
    if (sgn(step) <= 0) throw PreconditionFailed("scan: step must be positive");
    if (region.re_min > region.re_max || region.im_min > region.im_max)
        throw PreconditionFailed("scan: empty region");
    auto count = [&](const mpq_class& lo, const mpq_class& hi) {
        const mpq_class q = (hi - lo) / step;
        const mpz_class whole = q.get_num() / q.get_den();
        return static_cast<std::size_t>(whole.get_ui()) + 1;
    };
    SpectralGrid g;
    g.region = region;
    g.step = step;
    g.mode = mode;
    g.cols = count(region.re_min, region.re_max);
    g.rows = count(region.im_min, region.im_max);
    g.verdicts.resize(g.rows * g.cols);
    return g;
}

namespace {

PointOptions point_options(const ScanOptions& options, std::size_t index) {
    PointOptions p;
    p.cap = options.cap;
    p.policy = options.policy;
    p.build_witness = options.witness && options.witness_stride > 0 && index % options.witness_stride == 0;
    return p;
}

void finish_witness(PointVerdict& v, const ScanOptions& options) {
    if (options.witness && v.in_SPR == Tri::no && v.witness == WitnessState::none) v.witness = WitnessState::skipped;
}

}  // namespace

SpectralGrid scan_serial(const BetOperator& a, const BetOperator& b, const Region& region, const mpq_class& step,
                         const ScanOptions& options) {
    SpectralGrid g = make_grid(region, step, options.mode);
    for (std::size_t i = 0; i < g.verdicts.size(); ++i) {
        g.verdicts[i] = classify_point(a, b, g.point(i / g.cols, i % g.cols), options.mode, point_options(options, i));
        finish_witness(g.verdicts[i], options);
    }
    return g;
}

SpectralGrid scan_parallel(const BetOperator& a, const BetOperator& b, const Region& region, const mpq_class& step,
                           const ScanOptions& options) {
    SpectralGrid g = make_grid(region, step, options.mode);
    const long n = static_cast<long>(g.verdicts.size());
    std::vector<std::exception_ptr> errors(g.verdicts.size());
#ifdef _OPENMP
    const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
#endif
    for (long i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        try {
            g.verdicts[k] = classify_point(a, b, g.point(k / g.cols, k % g.cols), options.mode, point_options(options, k));
            finish_witness(g.verdicts[k], options);
        } catch (...) {
            errors[k] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return g;
}

}  // namespace browder
