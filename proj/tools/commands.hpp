#pragma once

#include "browder/fredholm/fredholm.hpp"
#include "browder/spectra/spectra.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace browder::cli {

enum Exit : int {
    ok = 0,
    failure = 1,
    bad_input = 2,
    undecided = 3,
    precondition = 4,
    precision = 5,
};

struct RunConfig {
    long precision_bits = 128;
    std::size_t power_cap = 16;
    /// 0: all available threads.
    int threads = 0;

    PrecisionPolicy policy() const;
};

/// Prints the Fredholm data and class flags of T - lambda as JSON.
int cmd_classify(const std::string& spec, const std::optional<std::string>& lambda, const RunConfig& cfg,
                 std::ostream& out, std::ostream& err);

/// Writes C.json and certificate.json into out_dir (when non-empty) and verifies the certificate.
int cmd_complete(const std::string& spec_a, const std::string& spec_b, const std::string& kind,
                 const std::string& out_dir, const RunConfig& cfg, std::ostream& out, std::ostream& err);

int cmd_verify(const std::string& certificate, const RunConfig& cfg, std::ostream& out, std::ostream& err);

struct ScanRequest {
    std::string spec_a;
    std::string spec_b;
    std::string region;
    std::string step;
    std::string mode = "all_C";
    bool witness = false;
    /// scan.csv and scan.svg go here; empty prints the CSV to `out`.
    std::string out_dir;
};

int cmd_scan(const ScanRequest& request, const RunConfig& cfg, std::ostream& out, std::ostream& err);

int cmd_oracle(const std::string& suite, std::size_t trials, std::uint64_t seed, std::ostream& out,
               std::ostream& err);

}  // namespace browder::cli
