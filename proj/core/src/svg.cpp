#include <array>
#include <sstream>

#include "gpulca/report.hpp"

namespace gpulca {

namespace {

constexpr std::array<const char*, 8> kPalette = {
    "#4e79a7", "#f28e2b", "#59a14f", "#e15759",
    "#b07aa1", "#76b7b2", "#edc948", "#9c755f",
};

std::string escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        default: out += c;
        }
    }
    return out;
}

} // namespace

std::string render_breakdown_svg(const BreakdownTable& table, const std::string& title) {
    const int bar_height = 18;
    const int row_gap = 8;
    const int label_width = 230;
    const int bar_width = 520;
    const int top = 56;
    const int legend_height = 24 + 18 * static_cast<int>((table.labels().size() + 3) / 4);
    const int height = top + static_cast<int>(kCategoryCount) * (bar_height + row_gap) +
                       legend_height + 16;
    const int width = label_width + bar_width + 40;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    svg << "<text x=\"16\" y=\"24\" font-size=\"15\" font-weight=\"bold\">"
        << escape(title) << "</text>\n";

    int y = top;
    for (auto cat : all_categories()) {
        svg << "<text x=\"" << label_width - 8 << "\" y=\"" << y + bar_height - 5
            << "\" text-anchor=\"end\">" << category_id(cat) << "</text>\n";
        if (table.is_defined(cat)) {
            double x = label_width;
            for (std::size_t i = 0; i < table.labels().size(); ++i) {
                const auto share = table.share(i, cat);
                const double w = share ? (*share / 100.0) * bar_width : 0.0;
                if (w > 0.0) {
                    svg << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w
                        << "\" height=\"" << bar_height << "\" fill=\""
                        << kPalette[i % kPalette.size()] << "\"/>\n";
                }
                x += w;
            }
        } else {
            svg << "<text x=\"" << label_width << "\" y=\"" << y + bar_height - 5
                << "\" fill=\"#888\">n/a</text>\n";
        }
        y += bar_height + row_gap;
    }

    y += 12;
    for (std::size_t i = 0; i < table.labels().size(); ++i) {
        const int lx = 16 + static_cast<int>(i % 4) * 190;
        const int ly = y + static_cast<int>(i / 4) * 18;
        svg << "<rect x=\"" << lx << "\" y=\"" << ly << "\" width=\"12\" height=\"12\" fill=\""
            << kPalette[i % kPalette.size()] << "\"/>\n";
        svg << "<text x=\"" << lx + 16 << "\" y=\"" << ly + 10 << "\">"
            << escape(table.labels()[i]) << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace gpulca
