#pragma once

#include <cstdint>
#include <vector>

#include "homotone/statistics.hpp"

namespace homotone {

// Target ordinates g1 < gc1 < gc2 < g2. The equidistant defaults aim the
// output histogram at a uniform distribution.
struct TargetLevels {
    double g1 = 0.0;
    double gc1 = 1.0 / 3.0;
    double gc2 = 2.0 / 3.0;
    double g2 = 1.0;
};

// Fitted homographic transfer: the curve
//   g(x) = (a1*g1*(x2-x)^gamma + a2*g2*(x-x1)^gamma)
//        / (a1*(x2-x)^gamma + a2*(x-x1)^gamma)
// passing through all four (node, target) pairs.
struct TransferFunction {
    double gamma = 1.0;
    double alpha1 = 1.0;
    double alpha2 = 1.0;
    NodeSet nodes;
    TargetLevels targets;
};

struct Lut {
    int maxval = 0;
    std::vector<std::uint16_t> entries; // length maxval+1, non-decreasing
};

// Plain two-point homographic interpolant:
//   (a1*f1*(x2-x) + a2*f2*(x-x1)) / (a1*(x2-x) + a2*(x-x1)).
// Requires x1 < x2 and positive alphas; the gamma == 1 special case of the
// generalized curve.
double two_point_homographic(double x1, double x2, double f1, double f2,
                             double alpha1, double alpha2, double x);

// The unique exponent making the curve pass through both interior points:
//   ln((gc1-g1)/(g2-gc1) * (g2-gc2)/(gc2-g1))
//   / ln((c1-x1)/(x2-c1) * (x2-c2)/(c2-x1)).
// Throws GammaUndefined when the denominator vanishes (|ln| < 1e-12) but the
// numerator does not; returns 1 when both vanish (any exponent fits).
double gamma_zero(const NodeSet& nodes, const TargetLevels& targets);

// Solves for gamma and reads off the canonical coefficients
//   alpha1 = (g2-gc1)/(x2-c1)^gamma, alpha2 = (gc1-g1)/(c1-x1)^gamma.
// Throws GammaUndefined, Overflow (coefficient not positive-finite in
// double), std::invalid_argument on unordered nodes/targets.
TransferFunction fit_transfer(const NodeSet& nodes, const TargetLevels& targets);

// Evaluates the curve; x outside [x1,x2] clamps to the endpoint values.
// The endpoint branches are exact. Internally the g2-weight
// w = 1/(1 + (a1/a2)*(u/v)^gamma) switches to log-domain evaluation once
// gamma*|ln(u/v)| > 50, so heavy exponents neither overflow nor lose
// monotonicity.
double eval_transfer(const TransferFunction& t, double x);

// entries[i] = from_unit(g(clamp(i/maxval)), maxval) for i in 0..maxval.
Lut build_lut(const TransferFunction& t, int maxval);

} // namespace homotone
