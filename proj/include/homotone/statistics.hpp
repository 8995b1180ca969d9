#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "homotone/image.hpp"

namespace homotone {

struct Histogram {
    std::vector<std::uint64_t> bins; // length maxval+1
    std::uint64_t total = 0;         // == sum of bins == pixel count
};

// Interpolation abscissae x1 < c1 < c2 < x2 on [0,1].
struct NodeSet {
    double x1 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    double x2 = 0.0;
};

struct IterationConfig {
    double epsilon = 1e-4; // stopping constant, unit-gray scale
    int max_iters = 100;
    double min_gap = 1e-6; // minimum node separation
};

struct IterationTrace {
    // (c1, c2) per step, index m starting at the m=0 initialization.
    std::vector<std::pair<double, double>> iterates;
    bool converged = false;
    bool cycle_detected = false;
    int iterations_used = 0; // == iterates.size() - 1
};

// Sufficient statistics of the partition D1 = [x1, c2], D2 = [c1, x2].
// Sums are of unit-gray values.
struct PartitionStats {
    std::uint64_t count1 = 0;
    double sum1 = 0.0;
    std::uint64_t count2 = 0;
    double sum2 = 0.0;
};

Histogram histogram(const GrayImage& img);

// (min, max) in unit-gray. Throws ConstantImage when min == max.
std::pair<double, double> extrema(const GrayImage& img);

// Arithmetic mean of unit samples.
double global_mean(const GrayImage& img);

// Counts and unit sums over D1 = {levels <= c2} and D2 = {levels >= c1}.
// Membership is decided as sample <=> threshold*maxval so integer samples
// never hit a float boundary twice.
PartitionStats partition_stats(const GrayImage& img, double c1, double c2);

// One fixed-point update: the means of D1 and D2 for the current (c1, c2).
// Throws EmptyPartition when either part has no pixels.
std::pair<double, double> interwoven_step(const GrayImage& img, double c1, double c2);

// The interwoven-means procedure: c1,c2 start at the midpoints between the
// extrema and the global mean, then iterate the partition means until both
// move less than epsilon. A period-2 cycle (iterate m+1 within epsilon of
// iterate m-1) is resolved by averaging the two cycle states and flagged.
// Hitting max_iters returns the last iterate with converged == false.
// Throws ConstantImage, EmptyPartition, DegenerateNodes (final ordering
// violates the min_gap separation).
std::pair<NodeSet, IterationTrace> interwoven_means(const GrayImage& img,
                                                    const IterationConfig& cfg);

} // namespace homotone
