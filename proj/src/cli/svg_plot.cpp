#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "goat/cli/commands.hpp"

namespace goat::cli {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 440.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 30.0;
constexpr double kTop = 30.0;
constexpr double kBottom = 60.0;
constexpr double kYMax = 1.5;

std::string fixed(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, 3);
    return {buf, res.ptr};
}

struct Frame {
    double n_max;
    [[nodiscard]] double x(double n) const { return kLeft + (kWidth - kLeft - kRight) * n / n_max; }
    [[nodiscard]] double y(double k) const { return kTop + (kHeight - kTop - kBottom) * (1.0 - k / kYMax); }
};

}  // namespace

std::string render_svg(const std::vector<PlotPoint>& points, double n_max) {
    const Frame frame{n_max};
    const double x0 = frame.x(0.0);
    const double x1 = frame.x(n_max);
    const double y0 = frame.y(0.0);
    const double y_top = frame.y(kYMax);
    const double y_limit = frame.y(std::numbers::sqrt2);

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fixed(kWidth) +
           "\" height=\"" + fixed(kHeight) + "\" viewBox=\"0 0 " + fixed(kWidth) + " " + fixed(kHeight) +
           "\">\n";
    svg += "  <title>Tether ratio k_n against dimension n</title>\n";
    svg += "  <rect x=\"0\" y=\"0\" width=\"" + fixed(kWidth) + "\" height=\"" + fixed(kHeight) +
           "\" fill=\"white\"/>\n";

    // axes
    svg += "  <g id=\"axes\" stroke=\"black\" stroke-width=\"1\">\n";
    svg += "    <line x1=\"" + fixed(x0) + "\" y1=\"" + fixed(y0) + "\" x2=\"" + fixed(x1) + "\" y2=\"" +
           fixed(y0) + "\"/>\n";
    svg += "    <line x1=\"" + fixed(x0) + "\" y1=\"" + fixed(y0) + "\" x2=\"" + fixed(x0) + "\" y2=\"" +
           fixed(y_top) + "\"/>\n";
    svg += "  </g>\n";

    svg += "  <g id=\"ticks\" font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
    for (int i = 0; i <= 6; ++i) {
        const double k = 0.25 * i;
        svg += "    <text x=\"" + fixed(x0 - 8.0) + "\" y=\"" + fixed(frame.y(k) + 4.0) +
               "\" text-anchor=\"end\">" + fixed(k) + "</text>\n";
    }
    constexpr int kXTicks = 5;
    for (int i = 0; i <= kXTicks; ++i) {
        const double n = n_max * i / kXTicks;
        svg += "    <text x=\"" + fixed(frame.x(n)) + "\" y=\"" + fixed(y0 + 18.0) +
               "\" text-anchor=\"middle\">" + fixed(n) + "</text>\n";
    }
    svg += "  </g>\n";

    svg += "  <text id=\"x-label\" x=\"" + fixed(0.5 * (x0 + x1)) + "\" y=\"" + fixed(kHeight - 15.0) +
           "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">dimension n</text>\n";
    svg += "  <text id=\"y-label\" x=\"18\" y=\"" + fixed(0.5 * (y0 + y_top)) +
           "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
           fixed(0.5 * (y0 + y_top)) + ")\">tether ratio k_n = R/r</text>\n";

    svg += "  <line id=\"asymptote\" data-k=\"" + fixed(std::numbers::sqrt2) + "\" x1=\"" + fixed(x0) +
           "\" y1=\"" + fixed(y_limit) + "\" x2=\"" + fixed(x1) + "\" y2=\"" + fixed(y_limit) +
           "\" stroke=\"gray\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n";
    svg += "  <text x=\"" + fixed(x1) + "\" y=\"" + fixed(y_limit - 6.0) +
           "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\" fill=\"gray\">sqrt(2) = 1.41421</text>\n";

    svg += "  <polyline id=\"k-curve\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i != 0) svg += ' ';
        svg += fixed(frame.x(points[i].n)) + "," + fixed(frame.y(points[i].k));
    }
    svg += "\"/>\n";
    svg += "</svg>\n";
    return svg;
}

}  // namespace goat::cli
