#include "trackbench/cli/plots.hpp"

#include <algorithm>
#include <sstream>

#include "trackbench/cli/tables.hpp"
#include "trackbench/error.hpp"

namespace trackbench::cli {
namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
constexpr int kPaletteSize = 10;

std::string xml_escape(const std::string& text) {
    std::string escaped;
    escaped.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': escaped += "&amp;"; break;
            case '<': escaped += "&lt;"; break;
            case '>': escaped += "&gt;"; break;
            case '"': escaped += "&quot;"; break;
            default: escaped += c; break;
        }
    }
    return escaped;
}

struct Range {
    double lo{0.0};
    double hi{1.0};

    [[nodiscard]] double to_unit(double v) const { return (v - lo) / (hi - lo); }
};

// Widens a degenerate span so the scale stays invertible.
Range spread(double lo, double hi) {
    if (hi - lo < 1e-12) {
        hi = lo + 1.0;
    }
    return {lo, hi};
}

struct Frame {
    double left, top, width, height;  // plot area in pixels

    [[nodiscard]] double x_px(const Range& r, double v) const {
        return left + r.to_unit(v) * width;
    }
    [[nodiscard]] double y_px(const Range& r, double v) const {
        return top + height - r.to_unit(v) * height;
    }
};

void open_svg(std::ostringstream& svg, double width, double height, const std::string& title) {
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width << ' ' << height
        << "\" width=\"" << width << "\" height=\"" << height
        << "\" font-family=\"Helvetica, Arial, sans-serif\" font-size=\"12\">\n";
    svg << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
        << "\" fill=\"#ffffff\"/>\n";
    svg << "  <text x=\"" << width / 2
        << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\" font-weight=\"bold\">"
        << xml_escape(title) << "</text>\n";
}

void draw_axes(std::ostringstream& svg, const Frame& f, const Range& xr, const Range& yr,
               const std::string& x_label, const std::string& y_label, bool x_ticks) {
    const double bottom = f.top + f.height;
    const double right = f.left + f.width;
    svg << "  <line x1=\"" << f.left << "\" y1=\"" << bottom << "\" x2=\"" << right << "\" y2=\""
        << bottom << "\" stroke=\"#000000\"/>\n";
    svg << "  <line x1=\"" << f.left << "\" y1=\"" << f.top << "\" x2=\"" << f.left << "\" y2=\""
        << bottom << "\" stroke=\"#000000\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double t = static_cast<double>(i) / 4.0;
        const double y_val = yr.lo + t * (yr.hi - yr.lo);
        const double y = f.y_px(yr, y_val);
        svg << "  <line x1=\"" << format_fixed(f.left - 5, 2) << "\" y1=\"" << format_fixed(y, 2)
            << "\" x2=\"" << f.left << "\" y2=\"" << format_fixed(y, 2)
            << "\" stroke=\"#000000\"/>\n";
        svg << "  <text x=\"" << format_fixed(f.left - 9, 2) << "\" y=\"" << format_fixed(y + 4, 2)
            << "\" text-anchor=\"end\">" << format_fixed(y_val, 2) << "</text>\n";
        if (x_ticks) {
            const double x_val = xr.lo + t * (xr.hi - xr.lo);
            const double x = f.x_px(xr, x_val);
            svg << "  <line x1=\"" << format_fixed(x, 2) << "\" y1=\"" << bottom << "\" x2=\""
                << format_fixed(x, 2) << "\" y2=\"" << format_fixed(bottom + 5, 2)
                << "\" stroke=\"#000000\"/>\n";
            svg << "  <text x=\"" << format_fixed(x, 2) << "\" y=\"" << format_fixed(bottom + 20, 2)
                << "\" text-anchor=\"middle\">" << format_fixed(x_val, 2) << "</text>\n";
        }
    }
    svg << "  <text x=\"" << f.left + f.width / 2 << "\" y=\"" << bottom + 40
        << "\" text-anchor=\"middle\">" << xml_escape(x_label) << "</text>\n";
    const double y_mid = f.top + f.height / 2;
    svg << "  <text x=\"16\" y=\"" << y_mid << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
        << y_mid << ")\">" << xml_escape(y_label) << "</text>\n";
}

}  // namespace

void write_line_chart_svg(const std::filesystem::path& file, const std::string& title,
                          const std::string& x_label, const std::string& y_label,
                          const std::vector<PlotSeries>& series) {
    if (series.empty()) {
        throw ValidationError("line chart needs at least one series");
    }
    double x_min = series[0].xs.empty() ? 0.0 : series[0].xs[0];
    double x_max = x_min;
    double y_min = 0.0;
    double y_max = 0.0;
    for (const auto& s : series) {
        if (s.xs.empty()) {
            throw ValidationError("series '" + s.label + "' has no points");
        }
        if (s.xs.size() != s.ys.size()) {
            throw ValidationError("series '" + s.label + "' has " + std::to_string(s.xs.size()) +
                                  " x values but " + std::to_string(s.ys.size()) + " y values");
        }
        x_min = std::min(x_min, *std::min_element(s.xs.begin(), s.xs.end()));
        x_max = std::max(x_max, *std::max_element(s.xs.begin(), s.xs.end()));
        y_min = std::min(y_min, *std::min_element(s.ys.begin(), s.ys.end()));
        y_max = std::max(y_max, *std::max_element(s.ys.begin(), s.ys.end()));
    }
    const Range xr = spread(x_min, x_max);
    const Range yr = spread(std::min(0.0, y_min), y_max);

    const double width = 760;
    const double height = 480;
    const Frame frame{64, 44, 760 - 64 - 210, 480 - 44 - 56};

    std::ostringstream svg;
    open_svg(svg, width, height, title);
    draw_axes(svg, frame, xr, yr, x_label, y_label, true);

    for (std::size_t i = 0; i < series.size(); ++i) {
        const auto& s = series[i];
        const char* color = kPalette[i % kPaletteSize];
        svg << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
        for (std::size_t p = 0; p < s.xs.size(); ++p) {
            if (p > 0) {
                svg << ' ';
            }
            svg << format_fixed(frame.x_px(xr, s.xs[p]), 2) << ','
                << format_fixed(frame.y_px(yr, s.ys[p]), 2);
        }
        svg << "\"/>\n";
    }

    const double legend_x = frame.left + frame.width + 16;
    for (std::size_t i = 0; i < series.size(); ++i) {
        const double y = frame.top + 8 + 20.0 * static_cast<double>(i);
        svg << "  <rect x=\"" << legend_x << "\" y=\"" << format_fixed(y, 2)
            << "\" width=\"12\" height=\"12\" fill=\"" << kPalette[i % kPaletteSize] << "\"/>\n";
        svg << "  <text x=\"" << legend_x + 18 << "\" y=\"" << format_fixed(y + 10, 2) << "\">"
            << xml_escape(series[i].label) << "</text>\n";
    }
    svg << "</svg>\n";
    write_text(file, svg.str());
}

void write_bar_chart_svg(const std::filesystem::path& file, const std::string& title,
                         const std::string& x_label, const std::string& y_label,
                         const std::vector<PlotBar>& bars) {
    if (bars.empty()) {
        throw ValidationError("bar chart needs at least one bar");
    }
    double y_min = 0.0;
    double y_max = 0.0;
    for (const auto& b : bars) {
        y_min = std::min(y_min, b.value);
        y_max = std::max(y_max, b.value);
    }
    const Range yr = spread(y_min, y_max);
    const Range xr{0.0, 1.0};

    const double width = 640;
    const double height = 480;
    const Frame frame{64, 44, 640 - 64 - 24, 480 - 44 - 86};

    std::ostringstream svg;
    open_svg(svg, width, height, title);
    draw_axes(svg, frame, xr, yr, x_label, y_label, false);

    const double slot = frame.width / static_cast<double>(bars.size());
    const double bar_width = slot * 0.6;
    const double baseline = frame.y_px(yr, std::max(0.0, yr.lo));
    for (std::size_t i = 0; i < bars.size(); ++i) {
        const double x = frame.left + slot * static_cast<double>(i) + slot * 0.2;
        const double top = frame.y_px(yr, bars[i].value);
        const double y0 = std::min(top, baseline);
        const double h = std::max(1.0, std::abs(baseline - top));
        svg << "  <rect x=\"" << format_fixed(x, 2) << "\" y=\"" << format_fixed(y0, 2)
            << "\" width=\"" << format_fixed(bar_width, 2) << "\" height=\"" << format_fixed(h, 2)
            << "\" fill=\"" << kPalette[i % kPaletteSize] << "\"/>\n";
        svg << "  <text x=\"" << format_fixed(x + bar_width / 2, 2) << "\" y=\""
            << format_fixed(y0 - 5, 2) << "\" text-anchor=\"middle\">"
            << format_fixed(bars[i].value, 3) << "</text>\n";
        const double label_x = x + bar_width / 2;
        const double label_y = frame.top + frame.height + 16;
        svg << "  <text x=\"" << format_fixed(label_x, 2) << "\" y=\"" << format_fixed(label_y, 2)
            << "\" text-anchor=\"end\" transform=\"rotate(-35 " << format_fixed(label_x, 2) << ' '
            << format_fixed(label_y, 2) << ")\">" << xml_escape(bars[i].label) << "</text>\n";
    }
    svg << "</svg>\n";
    write_text(file, svg.str());
}

}  // namespace trackbench::cli
