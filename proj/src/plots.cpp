#include "homotone/plots.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "homotone/transfer.hpp"

namespace homotone {

namespace {

constexpr double kViewport = 512.0;
constexpr int kCurveSamples = 256;

std::string real17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// Unit square to viewport, origin bottom-left.
double px(double x) { return kViewport * x; }
double py(double y) { return kViewport * (1.0 - y); }

double lerp(double a, double b, double t) { return a * (1.0 - t) + b * t; }

} // namespace

std::string histogram_csv(const Histogram& h) {
    std::string out = "level,count\n";
    for (std::size_t v = 0; v < h.bins.size(); ++v)
        out += std::to_string(v) + "," + std::to_string(h.bins[v]) + "\n";
    return out;
}

std::string curve_csv(const TransferFunction& t, int samples) {
    if (samples < 2) throw std::invalid_argument("curve_csv: need at least 2 samples");
    std::string out = "x,g\n";
    for (int k = 0; k < samples; ++k) {
        const double s = static_cast<double>(k) / static_cast<double>(samples - 1);
        const double x = lerp(t.nodes.x1, t.nodes.x2, s);
        out += real17(x) + "," + real17(eval_transfer(t, x)) + "\n";
    }
    return out;
}

std::string curve_svg(const TransferFunction& t) {
    std::string out =
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"512\" height=\"512\" "
        "viewBox=\"0 0 512 512\">\n";

    out += "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
    for (int k = 0; k < kCurveSamples; ++k) {
        const double s = static_cast<double>(k) / (kCurveSamples - 1);
        const double x = lerp(t.nodes.x1, t.nodes.x2, s);
        const double g = eval_transfer(t, x);
        if (k) out += ' ';
        out += coord(px(x)) + "," + coord(py(g));
    }
    out += "\"/>\n";

    const double xs[4] = {t.nodes.x1, t.nodes.c1, t.nodes.c2, t.nodes.x2};
    const double gs[4] = {t.targets.g1, t.targets.gc1, t.targets.gc2, t.targets.g2};
    for (int i = 0; i < 4; ++i)
        out += "<circle cx=\"" + coord(px(xs[i])) + "\" cy=\"" + coord(py(gs[i])) +
               "\" r=\"4\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

    out += "</svg>\n";
    return out;
}

std::string histogram_svg(const Histogram& h) {
    const std::uint64_t peak =
        h.bins.empty() ? 0 : *std::max_element(h.bins.begin(), h.bins.end());
    const double bar_w =
        h.bins.empty() ? kViewport : kViewport / static_cast<double>(h.bins.size());

    std::string out =
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"512\" height=\"512\" "
        "viewBox=\"0 0 512 512\">\n";
    for (std::size_t v = 0; v < h.bins.size(); ++v) {
        if (h.bins[v] == 0) continue;
        const double height =
            kViewport * static_cast<double>(h.bins[v]) / static_cast<double>(peak);
        out += "<rect x=\"" + coord(bar_w * static_cast<double>(v)) + "\" y=\"" +
               coord(kViewport - height) + "\" width=\"" + coord(bar_w) + "\" height=\"" +
               coord(height) + "\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace homotone
