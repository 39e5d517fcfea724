#include "commands.hpp"

#include "browder/classify/classify.hpp"
#include "browder/completion/completion.hpp"
#include "browder/error.hpp"
#include "browder/io/spec_json.hpp"
#include "browder/oracle/suites.hpp"
#include "browder/spectra/render.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>

namespace browder::cli {

PrecisionPolicy RunConfig::policy() const {
    PrecisionPolicy p;
    p.bits = precision_bits;
    p.max_bits = std::max(1024L, precision_bits * 8);
    return p;
}

namespace {

int report_parse_error(const ParseError& e, std::ostream& err) {
    err << "error: " << e.what();
    if (e.line() > 0) err << " (line " << e.line() << ", column " << e.column() << ")";
    err << '\n';
    return Exit::bad_input;
}

/// Maps toolkit errors to exit codes; `body` does the work.
template <class F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        return report_parse_error(e, err);
    } catch (const PreconditionFailed& e) {
        err << "precondition failed: " << e.what() << '\n';
        return Exit::precondition;
    } catch (const PrecisionExhausted& e) {
        err << "precision exhausted: " << e.what() << '\n';
        return Exit::precision;
    } catch (const DimensionMismatch& e) {
        err << "error: " << e.what() << '\n';
        return Exit::bad_input;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return Exit::failure;
    }
}

void ensure_dir(const std::string& dir) {
    if (!dir.empty()) std::filesystem::create_directories(dir);
}

std::string join(const std::string& dir, const char* name) { return (std::filesystem::path(dir) / name).string(); }

}  // namespace

int cmd_classify(const std::string& spec, const std::optional<std::string>& lambda, const RunConfig& cfg,
                 std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const BetOperator t = io::read_operator_file(spec);
        const GaussQ l = lambda ? parse_gauss(*lambda) : GaussQ();
        const FredholmData fd = fredholm_data(translate(t, l), cfg.power_cap, cfg.policy());
        const OperatorClass cls = classify_from(fd);
        out << io::report_json(l, fd, cls).dump(2) << '\n';
        return cls.all_decided() ? Exit::ok : Exit::undecided;
    });
}

int cmd_complete(const std::string& spec_a, const std::string& spec_b, const std::string& kind,
                 const std::string& out_dir, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (kind != "browder" && kind != "invertible") throw ParseError("unknown completion kind '" + kind + "'");
        const BetOperator a = io::read_operator_file(spec_a);
        const BetOperator b = io::read_operator_file(spec_b);
        const Completion c = kind == "browder" ? construct_browder_C(a, b, cfg.power_cap, cfg.policy())
                                               : construct_invertible_C(a, b, cfg.power_cap, cfg.policy());
        if (!out_dir.empty()) {
            ensure_dir(out_dir);
            io::write_json_file(join(out_dir, "C.json"), io::to_json(c.c));
            io::write_json_file(join(out_dir, "certificate.json"), io::to_json(c.certificate));
        } else {
            out << io::to_json(c.c).dump(2) << '\n';
        }
        const Verification v = verify_certificate(c.certificate, cfg.power_cap, cfg.policy());
        if (v.ok) {
            out << "verified: C has " << c.c.perturbation().size() << " rank-one term(s)\n";
            return Exit::ok;
        }
        out << "verification failed\n";
        for (const auto& r : v.reasons) out << "  " << r << '\n';
        return Exit::failure;
    });
}

int cmd_verify(const std::string& certificate, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const CompletionCertificate cert = io::certificate_from_json(io::read_json_file(certificate));
        const Verification v = verify_certificate(cert, cfg.power_cap, cfg.policy());
        out << (v.ok ? "verified" : "rejected") << '\n';
        for (const auto& r : v.reasons) out << "  " << r << '\n';
        return v.ok ? Exit::ok : Exit::failure;
    });
}

int cmd_scan(const ScanRequest& request, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Region region = parse_region(request.region);
        const mpq_class step = parse_rational(request.step);
        if (sgn(step) <= 0) throw ParseError("step must be positive");
        ScanOptions options;
        options.mode = parse_scan_mode(request.mode);
        options.cap = cfg.power_cap;
        options.policy = cfg.policy();
        options.witness = request.witness;
        options.threads = cfg.threads;
        const BetOperator a = io::read_operator_file(request.spec_a);
        const BetOperator b = io::read_operator_file(request.spec_b);
        const SpectralGrid grid = scan_parallel(a, b, region, step, options);
        std::ostream& summary_stream = request.out_dir.empty() ? err : out;
        if (request.out_dir.empty()) {
            write_csv(grid, out, request.witness);
        } else {
            ensure_dir(request.out_dir);
            std::ofstream csv(join(request.out_dir, "scan.csv"));
            write_csv(grid, csv, request.witness);
            std::ofstream svg(join(request.out_dir, "scan.svg"));
            write_svg(grid, svg);
        }
        summary_stream << "grid " << grid.cols << "x" << grid.rows << " mode " << to_string(grid.mode)
                       << ": yes: " << grid.count(Tri::yes) << ", no: " << grid.count(Tri::no)
                       << ", undecided: " << grid.count(Tri::undecided);
        if (request.witness) {
            std::size_t verified = 0;
            std::size_t failed = 0;
            for (const auto& v : grid.verdicts) {
                verified += v.witness == WitnessState::verified;
                failed += v.witness == WitnessState::failed;
            }
            summary_stream << "; witnesses verified: " << verified << ", failed: " << failed;
        }
        summary_stream << '\n';
        return Exit::ok;
    });
}

int cmd_oracle(const std::string& suite, std::size_t trials, std::uint64_t seed, std::ostream& out,
               std::ostream& err) {
    return guarded(err, [&] {
        const oracle::SuiteReport r = oracle::run_suite(suite, trials, seed);
        out << r.suite << ": " << r.trials << " trials, seed " << r.seed << ", " << r.failures << " failure(s)\n";
        for (const auto& c : r.counterexamples) out << "  counterexample: " << c << '\n';
        return r.passed() ? Exit::ok : Exit::failure;
    });
}

}  // namespace browder::cli
