#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using namespace browder::cli;
    CLI::App app{"Classification, completion and spectral scans for upper-triangular operator matrices"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--precision-bits", cfg.precision_bits, "Starting ball precision in bits")
        ->envname("BROWDER_PRECISION_BITS")
        ->check(CLI::Range(64L, 1L << 20));
    app.add_option("--power-cap", cfg.power_cap, "Largest power tried for ascent and descent")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 16));
    app.add_option("--threads", cfg.threads, "Scan threads (0: all)")->check(CLI::NonNegativeNumber);

    auto* classify = app.add_subcommand("classify", "Fredholm data and class of T - lambda");
    std::string spec;
    std::string lambda;
    classify->add_option("spec", spec, "Operator spec (JSON)")->required();
    classify->add_option("--lambda", lambda, "Point, e.g. 1/2 or 1/2+1/3i");

    auto* complete = app.add_subcommand("complete", "Construct C and its certificate");
    std::string spec_a;
    std::string spec_b;
    std::string kind = "browder";
    std::string out_dir;
    complete->add_option("A", spec_a, "Operator spec for A")->required();
    complete->add_option("B", spec_b, "Operator spec for B")->required();
    complete->add_option("--kind", kind, "browder or invertible")->check(CLI::IsMember({"browder", "invertible"}));
    complete->add_option("--out", out_dir, "Output directory");

    auto* verify = app.add_subcommand("verify", "Re-check a completion certificate");
    std::string cert;
    verify->add_option("certificate", cert, "Certificate JSON")->required();

    auto* scan = app.add_subcommand("scan", "Classify a rational grid of points");
    ScanRequest req;
    scan->add_option("A", req.spec_a, "Operator spec for A")->required();
    scan->add_option("B", req.spec_b, "Operator spec for B")->required();
    scan->add_option("--region", req.region, "re0,re1,im0,im1")->required();
    scan->add_option("--step", req.step, "Grid step, e.g. 1/20")->required();
    scan->add_option("--mode", req.mode, "all_C, fredholm_C or invertible_C")
        ->check(CLI::IsMember({"all_C", "fredholm_C", "invertible_C"}));
    scan->add_flag("--witness", req.witness, "Construct and verify a completion at points not in SPR");
    scan->add_option("--out", req.out_dir, "Output directory for scan.csv and scan.svg");

    auto* oracle = app.add_subcommand("oracle", "Randomised finite-dimensional checks");
    std::string suite;
    std::size_t trials = 500;
    std::uint64_t seed = 1;
    oracle->add_option("--suite", suite, "six-term, two-of-three or corner")
        ->required()
        ->check(CLI::IsMember({"six-term", "two-of-three", "corner"}));
    oracle->add_option("--trials", trials, "Number of random instances");
    oracle->add_option("--seed", seed, "Random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : Exit::bad_input;
    }

    if (*classify)
        return cmd_classify(spec, lambda.empty() ? std::nullopt : std::optional<std::string>(lambda), cfg, std::cout,
                            std::cerr);
    if (*complete) return cmd_complete(spec_a, spec_b, kind, out_dir, cfg, std::cout, std::cerr);
    if (*verify) return cmd_verify(cert, cfg, std::cout, std::cerr);
    if (*scan) return cmd_scan(req, cfg, std::cout, std::cerr);
    return cmd_oracle(suite, trials, seed, std::cout, std::cerr);
}
