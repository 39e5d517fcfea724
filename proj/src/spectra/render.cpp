#include "browder/spectra/render.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace browder {

void write_csv(const SpectralGrid& grid, std::ostream& out, bool witness_column) {
    out << "re,im,mode,in_sigma_lb_A,in_sigma_rb_B,index_condition_fails,in_SPR";
    if (witness_column) out << ",witness";
    out << '\n';
    for (std::size_t r = 0; r < grid.rows; ++r) {
        for (std::size_t c = 0; c < grid.cols; ++c) {
            const PointVerdict& v = grid.verdicts[r * grid.cols + c];
            out << rational_to_string(v.lambda.re()) << ',' << rational_to_string(v.lambda.im()) << ','
                << to_string(grid.mode) << ',' << to_string(v.in_sigma_lb_A) << ',' << to_string(v.in_sigma_rb_B)
                << ',' << to_string(v.index_condition_fails) << ',' << to_string(v.in_SPR);
            if (witness_column) out << ',' << to_string(v.witness);
            out << '\n';
        }
    }
}

namespace {

const char* colour(Tri t) {
    switch (t) {
        case Tri::yes: return "#b2182b";
        case Tri::no: return "#f7f7f7";
        default: return "#f4a582";
    }
}

}  // namespace

void write_svg(const SpectralGrid& grid, std::ostream& out) {
    constexpr int cell = 6;
    constexpr int legend = 90;
    const std::size_t width = grid.cols * cell;
    const std::size_t height = grid.rows * cell;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width + legend << "\" height=\""
        << std::max<std::size_t>(height, 60) << "\" shape-rendering=\"crispEdges\">\n";
    out << "<title>SPR scan, mode " << to_string(grid.mode) << ", step " << rational_to_string(grid.step)
        << "</title>\n";
    for (std::size_t r = 0; r < grid.rows; ++r) {
        // Imaginary part grows upwards.
        const std::size_t y = (grid.rows - 1 - r) * cell;
        for (std::size_t c = 0; c < grid.cols; ++c) {
            out << "<rect x=\"" << c * cell << "\" y=\"" << y << "\" width=\"" << cell << "\" height=\"" << cell
                << "\" fill=\"" << colour(grid.verdicts[r * grid.cols + c].in_SPR) << "\"/>\n";
        }
    }
    const std::pair<Tri, const char*> entries[] = {{Tri::yes, "in SPR"}, {Tri::no, "not in SPR"},
                                                   {Tri::undecided, "undecided"}};
    int y = 8;
    for (const auto& [t, label] : entries) {
        out << "<rect x=\"" << width + 8 << "\" y=\"" << y << "\" width=\"10\" height=\"10\" fill=\"" << colour(t)
            << "\" stroke=\"#333\"/>\n";
        out << "<text x=\"" << width + 22 << "\" y=\"" << y + 9 << "\" font-size=\"10\" font-family=\"sans-serif\">"
            << label << "</text>\n";
        y += 16;
    }
    out << "</svg>\n";
}

}  // namespace browder
