#include "homotone/statistics.hpp"

#include <cmath>
#include <cstdint>
#include <string>

#include "homotone/errors.hpp"

namespace homotone {

Histogram histogram(const GrayImage& img) {
    Histogram h;
    h.bins.assign(static_cast<std::size_t>(img.maxval) + 1, 0);
    for (std::uint16_t s : img.samples) ++h.bins[s];
    h.total = img.samples.size();
    return h;
}

std::pair<double, double> extrema(const GrayImage& img) {
    std::uint16_t lo = img.samples.front();
    std::uint16_t hi = lo;
    for (std::uint16_t s : img.samples) {
        if (s < lo) lo = s;
        if (s > hi) hi = s;
    }
    if (lo == hi)
        throw ConstantImage("all samples equal " + std::to_string(lo) +
                            "; no dynamic range to stretch");
    return {to_unit(lo, img.maxval), to_unit(hi, img.maxval)};
}

double global_mean(const GrayImage& img) {
    std::uint64_t acc = 0;
    for (std::uint16_t s : img.samples) acc += s;
    // One rounding: the integer sum and the divisor are both exact doubles.
    return static_cast<double>(acc) /
           (static_cast<double>(img.maxval) * static_cast<double>(img.samples.size()));
}

PartitionStats partition_stats(const GrayImage& img, double c1, double c2) {
    // sample/maxval >= c1  <=>  sample >= c1*maxval, one rounding per
    // threshold instead of one per pixel.
    const double t1 = c1 * static_cast<double>(img.maxval);
    const double t2 = c2 * static_cast<double>(img.maxval);
    std::uint64_t count1 = 0, count2 = 0;
    std::uint64_t acc1 = 0, acc2 = 0;
    for (std::uint16_t s : img.samples) {
        const double sd = static_cast<double>(s);
        if (sd <= t2) {
            ++count1;
            acc1 += s;
        }
        if (sd >= t1) {
            ++count2;
            acc2 += s;
        }
    }
    PartitionStats ps;
    ps.count1 = count1;
    ps.count2 = count2;
    ps.sum1 = static_cast<double>(acc1) / static_cast<double>(img.maxval);
    ps.sum2 = static_cast<double>(acc2) / static_cast<double>(img.maxval);
    return ps;
}

std::pair<double, double> interwoven_step(const GrayImage& img, double c1, double c2) {
    const PartitionStats ps = partition_stats(img, c1, c2);
    if (ps.count1 == 0 || ps.count2 == 0)
        throw EmptyPartition("partition D" + std::string(ps.count1 == 0 ? "1" : "2") +
                             " is empty at c1=" + std::to_string(c1) +
                             ", c2=" + std::to_string(c2));
    return {ps.sum1 / static_cast<double>(ps.count1),
            ps.sum2 / static_cast<double>(ps.count2)};
}

std::pair<NodeSet, IterationTrace> interwoven_means(const GrayImage& img,
                                                    const IterationConfig& cfg) {
    const auto [x1, x2] = extrema(img);
    const double lmed = global_mean(img);

    IterationTrace trace;
    double c1 = (x1 + lmed) / 2.0;
    double c2 = (lmed + x2) / 2.0;
    trace.iterates.emplace_back(c1, c2);

    double r1 = c1, r2 = c2;
    for (int m = 0; m < cfg.max_iters; ++m) {
        const auto [n1, n2] = interwoven_step(img, c1, c2);
        trace.iterates.emplace_back(n1, n2);
        if (std::abs(n1 - c1) < cfg.epsilon && std::abs(n2 - c2) < cfg.epsilon) {
            trace.converged = true;
            r1 = n1;
            r2 = n2;
            break;
        }
        if (trace.iterates.size() >= 3) {
            const auto& back2 = trace.iterates[trace.iterates.size() - 3];
            if (std::abs(n1 - back2.first) < cfg.epsilon &&
                std::abs(n2 - back2.second) < cfg.epsilon) {
                // Period-2 oscillation: settle on the midpoint of the two
                // cycle states.
                trace.cycle_detected = true;
                r1 = (n1 + c1) / 2.0;
                r2 = (n2 + c2) / 2.0;
                break;
            }
        }
        c1 = n1;
        c2 = n2;
        r1 = n1;
        r2 = n2;
    }
    trace.iterations_used = static_cast<int>(trace.iterates.size()) - 1;

    if (!(x1 + cfg.min_gap <= r1 && r1 + cfg.min_gap <= r2 && r2 + cfg.min_gap <= x2))
        throw DegenerateNodes("nodes (" + std::to_string(x1) + ", " + std::to_string(r1) +
                              ", " + std::to_string(r2) + ", " + std::to_string(x2) +
                              ") closer than min_gap " + std::to_string(cfg.min_gap));

    return {NodeSet{x1, r1, r2, x2}, trace};
}

} // namespace homotone
