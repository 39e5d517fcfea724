#pragma once

#include "browder/spectra/spectra.hpp"

#include <ostream>

namespace browder {

/// re,im,mode,in_sigma_lb_A,in_sigma_rb_B,index_condition_fails,in_SPR[,witness]
void write_csv(const SpectralGrid& grid, std::ostream& out, bool witness_column = false);

/// One rectangle per grid cell coloured by in_SPR, with a legend.
void write_svg(const SpectralGrid& grid, std::ostream& out);

}  // namespace browder
