#include "antipodes/svg.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <vector>

#include "antipodes/errors.hpp"

namespace antipodes {
namespace {

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

void write_loglog_svg(std::ostream& out, const LogLogPlot& plot) {
    if (plot.points.empty()) {
        throw InputError("nothing to plot");
    }
    std::vector<double> lx;
    std::vector<double> ly;
    for (const auto& [x, y] : plot.points) {
        if (!(x > 0.0) || !(y > 0.0) || !std::isfinite(x) || !std::isfinite(y)) {
            throw InputError("log-log plots need positive finite coordinates");
        }
        lx.push_back(std::log2(x));
        ly.push_back(std::log2(y));
    }
    double x0 = *std::min_element(lx.begin(), lx.end());
    double x1 = *std::max_element(lx.begin(), lx.end());
    double y0 = *std::min_element(ly.begin(), ly.end());
    double y1 = *std::max_element(ly.begin(), ly.end());
    if (plot.fit) {
        for (double x : {x0, x1}) {
            const double y = plot.fit->slope * x + plot.fit->intercept;
            y0 = std::min(y0, y);
            y1 = std::max(y1, y);
        }
    }
    x0 = std::floor(x0) - 0.5;
    x1 = std::ceil(x1) + 0.5;
    y0 = std::floor(y0) - 0.5;
    y1 = std::ceil(y1) + 0.5;

    const double width = 640.0;
    const double height = 480.0;
    const double left = 70.0;
    const double right = 20.0;
    const double top = 40.0;
    const double bottom = 60.0;
    auto px = [&](double x) { return left + (x - x0) / (x1 - x0) * (width - left - right); };
    auto py = [&](double y) { return height - bottom - (y - y0) / (y1 - y0) * (height - top - bottom); };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"16\">"
        << escape(plot.title) << "</text>\n";
    out << "<g stroke=\"#ccc\" stroke-width=\"1\" font-family=\"sans-serif\" font-size=\"11\">\n";
    for (double t = std::ceil(x0); t <= x1; t += 1.0) {
        out << "<line x1=\"" << px(t) << "\" y1=\"" << py(y0) << "\" x2=\"" << px(t) << "\" y2=\""
            << py(y1) << "\"/>\n";
        out << "<text stroke=\"none\" fill=\"black\" x=\"" << px(t) << "\" y=\"" << py(y0) + 16
            << "\" text-anchor=\"middle\">2^" << t << "</text>\n";
    }
    for (double t = std::ceil(y0); t <= y1; t += 1.0) {
        out << "<line x1=\"" << px(x0) << "\" y1=\"" << py(t) << "\" x2=\"" << px(x1) << "\" y2=\""
            << py(t) << "\"/>\n";
        out << "<text stroke=\"none\" fill=\"black\" x=\"" << left - 6 << "\" y=\"" << py(t) + 4
            << "\" text-anchor=\"end\">2^" << t << "</text>\n";
    }
    out << "</g>\n";
    out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << width - left - right
        << "\" height=\"" << height - top - bottom << "\" fill=\"none\" stroke=\"black\"/>\n";
    out << "<text x=\"" << (left + width - right) / 2 << "\" y=\"" << height - 16
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
        << escape(plot.x_label) << "</text>\n";
    out << "<text transform=\"translate(18," << (top + height - bottom) / 2
        << ") rotate(-90)\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
        << escape(plot.y_label) << "</text>\n";
    if (plot.fit) {
        const double ya = plot.fit->slope * x0 + plot.fit->intercept;
        const double yb = plot.fit->slope * x1 + plot.fit->intercept;
        out << "<line x1=\"" << px(x0) << "\" y1=\"" << py(ya) << "\" x2=\"" << px(x1) << "\" y2=\""
            << py(yb) << "\" stroke=\"#c33\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << width - right - 6 << "\" y=\"" << top + 18
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#c33\">slope "
            << plot.fit->slope << "</text>\n";
    }
    for (std::size_t i = 0; i < lx.size(); ++i) {
        out << "<circle cx=\"" << px(lx[i]) << "\" cy=\"" << py(ly[i])
            << "\" r=\"4\" fill=\"#236\"/>\n";
    }
    out << "</svg>\n";
}

}  // namespace antipodes
