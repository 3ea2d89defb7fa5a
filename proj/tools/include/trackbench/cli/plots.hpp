#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace trackbench::cli {

struct PlotSeries {
    std::string label;  // shown verbatim in the legend
    std::vector<double> xs;
    std::vector<double> ys;
};

struct PlotBar {
    std::string label;
    double value{0.0};
};

// Self-contained SVG line chart: axes with tick labels, one polyline per
// series, and a legend listing every series label as a text node.
void write_line_chart_svg(const std::filesystem::path& file, const std::string& title,
                          const std::string& x_label, const std::string& y_label,
                          const std::vector<PlotSeries>& series);

// Self-contained SVG bar chart with a value caption above every bar.
void write_bar_chart_svg(const std::filesystem::path& file, const std::string& title,
                         const std::string& x_label, const std::string& y_label,
                         const std::vector<PlotBar>& bars);

}  // namespace trackbench::cli
