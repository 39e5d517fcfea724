#pragma once

#include "browder/fredholm/fredholm.hpp"
#include "browder/numeric/gauss_rational.hpp"
#include "browder/op/bet_operator.hpp"
#include "browder/tri.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace browder {

/// Range of C over which the Browder spectra of M_C are intersected.
enum class ScanMode { all_C, fredholm_C, invertible_C };

ScanMode parse_scan_mode(std::string_view text);
std::string_view to_string(ScanMode mode);

enum class WitnessState { none, verified, failed, skipped };
std::string_view to_string(WitnessState state);

/// lambda against sigma_lb(A) u sigma_rb(B) u {alpha(A-l)+alpha(B-l) != beta(A-l)+beta(B-l)}.
struct PointVerdict {
    GaussQ lambda;
    Tri in_sigma_lb_A = Tri::undecided;
    Tri in_sigma_rb_B = Tri::undecided;
    Tri index_condition_fails = Tri::undecided;
    Tri in_SPR = Tri::undecided;
    WitnessState witness = WitnessState::none;
};

struct PointOptions {
    std::size_t cap = 16;
    PrecisionPolicy policy;
    /// Construct and verify a completion C at points outside SPR.
    bool build_witness = false;
};

PointVerdict classify_point(const BetOperator& a, const BetOperator& b, const GaussQ& lambda, ScanMode mode,
                            const PointOptions& options = {});

struct Region {
    mpq_class re_min;
    mpq_class re_max;
    mpq_class im_min;
    mpq_class im_max;
};

/// "re0,re1,im0,im1" with exact rational entries; throws ParseError.
Region parse_region(std::string_view text);

struct ScanOptions {
    ScanMode mode = ScanMode::all_C;
    std::size_t cap = 16;
    PrecisionPolicy policy;
    bool witness = false;
    /// Witnesses are attempted at every stride-th point outside SPR (by grid index).
    std::size_t witness_stride = 1;
    /// 0: the OpenMP default.
    int threads = 0;
};

/// Rows run over im ascending, columns over re ascending: verdicts[row * cols + col].
struct SpectralGrid {
    Region region;
    mpq_class step;
    ScanMode mode = ScanMode::all_C;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<PointVerdict> verdicts;

    GaussQ point(std::size_t row, std::size_t col) const;
    std::size_t count(Tri in_spr) const;
};

/// Grid shape for a region and step; throws PreconditionFailed for step <= 0 or an empty region.
SpectralGrid make_grid(const Region& region, const mpq_class& step, ScanMode mode);

SpectralGrid scan_serial(const BetOperator& a, const BetOperator& b, const Region& region, const mpq_class& step,
                         const ScanOptions& options = {});
SpectralGrid scan_parallel(const BetOperator& a, const BetOperator& b, const Region& region, const mpq_class& step,
                           const ScanOptions& options = {});

}  // namespace browder
