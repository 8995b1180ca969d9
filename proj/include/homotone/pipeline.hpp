#pragma once

#include <string>
#include <utility>

#include "homotone/image.hpp"
#include "homotone/statistics.hpp"
#include "homotone/transfer.hpp"

namespace homotone {

// Everything needed to reproduce one enhancement run without the image.
struct EnhanceReport {
    NodeSet nodes;
    TargetLevels targets;
    double gamma = 1.0;
    double alpha1 = 1.0;
    double alpha2 = 1.0;
    int iterations_used = 0;
    bool converged = false;
    bool cycle_detected = false;
    Histogram histogram_before;
    Histogram histogram_after;
};

// Per-pixel table lookup. n_threads > 1 splits the sample range into
// contiguous chunks; every schedule writes the same bytes. The LUT maxval
// must match the image.
GrayImage apply_lut(const GrayImage& img, const Lut& lut, int n_threads = 1);

// Full run: interwoven-means nodes, curve fit, LUT application. The output
// keeps the input dimensions and maxval. Propagates ConstantImage,
// DegenerateNodes, EmptyPartition, GammaUndefined, Overflow.
std::pair<GrayImage, EnhanceReport> enhance(const GrayImage& img,
                                            const TargetLevels& targets,
                                            const IterationConfig& cfg,
                                            int n_threads = 1);

// JSON with a fixed key order: x1, c1, c2, x2, g1, gc1, gc2, g2, gamma,
// alpha1, alpha2, iterations, converged, cycle_detected, histogram_before,
// histogram_after. Reals carry 17 significant digits so they parse back
// bit-exactly.
std::string serialize_report(const EnhanceReport& r, bool include_histograms = true);

} // namespace homotone
