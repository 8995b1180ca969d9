#include "homotone/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "homotone/errors.hpp"
#include "homotone/image.hpp"

namespace homotone {

namespace {

// |ln| below this counts as a vanishing logarithm in the gamma solve.
constexpr double kLogTolerance = 1e-12;
// Switch the weight fraction to log-domain once gamma*|ln(u/v)| passes this.
constexpr double kLogDomainTrigger = 50.0;

void require_strictly_increasing(double a, double b, double c, double d, const char* what) {
    if (!(a < b && b < c && c < d))
        throw std::invalid_argument(std::string(what) + " not strictly increasing");
}

} // namespace

double two_point_homographic(double x1, double x2, double f1, double f2,
                             double alpha1, double alpha2, double x) {
    const double u = x2 - x;
    const double v = x - x1;
    return (alpha1 * f1 * u + alpha2 * f2 * v) / (alpha1 * u + alpha2 * v);
}

double gamma_zero(const NodeSet& n, const TargetLevels& t) {
    const double num = std::log((t.gc1 - t.g1) / (t.g2 - t.gc1) *
                                ((t.g2 - t.gc2) / (t.gc2 - t.g1)));
    const double den = std::log((n.c1 - n.x1) / (n.x2 - n.c1) *
                                ((n.x2 - n.c2) / (n.c2 - n.x1)));
    if (std::abs(den) < kLogTolerance) {
        if (std::abs(num) < kLogTolerance) return 1.0; // any exponent fits
        throw GammaUndefined("node cross-ratio is 1 but target cross-ratio is not; "
                             "no finite exponent fits both interior points");
    }
    return num / den;
}

TransferFunction fit_transfer(const NodeSet& n, const TargetLevels& t) {
    require_strictly_increasing(n.x1, n.c1, n.c2, n.x2, "nodes");
    require_strictly_increasing(t.g1, t.gc1, t.gc2, t.g2, "targets");

    TransferFunction tf;
    tf.gamma = gamma_zero(n, t);
    tf.alpha1 = (t.g2 - t.gc1) / std::pow(n.x2 - n.c1, tf.gamma);
    tf.alpha2 = (t.gc1 - t.g1) / std::pow(n.c1 - n.x1, tf.gamma);
    tf.nodes = n;
    tf.targets = t;
    if (!std::isfinite(tf.alpha1) || !std::isfinite(tf.alpha2) || tf.alpha1 <= 0.0 ||
        tf.alpha2 <= 0.0)
        throw Overflow("coefficients not representable: alpha1=" + std::to_string(tf.alpha1) +
                       ", alpha2=" + std::to_string(tf.alpha2) +
                       " at gamma=" + std::to_string(tf.gamma));
    return tf;
}

double eval_transfer(const TransferFunction& t, double x) {
    const double x1 = t.nodes.x1, x2 = t.nodes.x2;
    const double g1 = t.targets.g1, g2 = t.targets.g2;
    if (x <= x1) return g1;
    if (x >= x2) return g2;

    const double u = x2 - x;
    const double v = x - x1;
    const double log_ratio = std::log(u / v);

    double w; // weight of g2
    if (t.gamma * std::abs(log_ratio) > kLogDomainTrigger) {
        const double e = std::log(t.alpha1) - std::log(t.alpha2) + t.gamma * log_ratio;
        w = e >= 0.0 ? std::exp(-e) / (1.0 + std::exp(-e)) : 1.0 / (1.0 + std::exp(e));
    } else {
        w = 1.0 / (1.0 + (t.alpha1 / t.alpha2) * std::pow(u / v, t.gamma));
    }
    return g1 * (1.0 - w) + g2 * w;
}

Lut build_lut(const TransferFunction& t, int maxval) {
    if (maxval < 1 || maxval > 65535)
        throw std::invalid_argument("build_lut: maxval " + std::to_string(maxval) +
                                    " outside [1,65535]");
    Lut lut;
    lut.maxval = maxval;
    lut.entries.resize(static_cast<std::size_t>(maxval) + 1);
    for (int i = 0; i <= maxval; ++i) {
        const double x = std::clamp(to_unit(i, maxval), t.nodes.x1, t.nodes.x2);
        lut.entries[static_cast<std::size_t>(i)] =
            static_cast<std::uint16_t>(from_unit(eval_transfer(t, x), maxval));
    }
    return lut;
}

} // namespace homotone
