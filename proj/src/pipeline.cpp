#include "homotone/pipeline.hpp"

#include <cstdio>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace homotone {

namespace {

void append_real(std::string& out, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

void append_real_field(std::string& out, const char* key, double v, bool last = false) {
    out += "  \"";
    out += key;
    out += "\": ";
    append_real(out, v);
    out += last ? "\n" : ",\n";
}

void append_histogram_field(std::string& out, const char* key, const Histogram& h,
                            bool last = false) {
    out += "  \"";
    out += key;
    out += "\": [";
    for (std::size_t i = 0; i < h.bins.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(h.bins[i]);
    }
    out += last ? "]\n" : "],\n";
}

} // namespace

GrayImage apply_lut(const GrayImage& img, const Lut& lut, int n_threads) {
    if (lut.maxval != img.maxval)
        throw std::invalid_argument("apply_lut: LUT maxval " + std::to_string(lut.maxval) +
                                    " does not match image maxval " +
                                    std::to_string(img.maxval));
    GrayImage out;
    out.width = img.width;
    out.height = img.height;
    out.maxval = img.maxval;
    out.samples.resize(img.samples.size());

    const std::size_t n = img.samples.size();
    auto map_range = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) out.samples[i] = lut.entries[img.samples[i]];
    };

    if (n_threads <= 1 || n < 2) {
        map_range(0, n);
        return out;
    }
    // Contiguous chunks; each index is written exactly once, so any split
    // yields the same bytes as the sequential pass.
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(n_threads), n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t t = 0; t < workers; ++t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(map_range, lo, hi);
    }
    for (auto& th : pool) th.join();
    return out;
}

std::pair<GrayImage, EnhanceReport> enhance(const GrayImage& img, const TargetLevels& targets,
                                            const IterationConfig& cfg, int n_threads) {
    img.validate();
    auto [nodes, trace] = interwoven_means(img, cfg);
    const TransferFunction tf = fit_transfer(nodes, targets);
    const Lut lut = build_lut(tf, img.maxval);
    GrayImage out = apply_lut(img, lut, n_threads);

    EnhanceReport report;
    report.nodes = nodes;
    report.targets = targets;
    report.gamma = tf.gamma;
    report.alpha1 = tf.alpha1;
    report.alpha2 = tf.alpha2;
    report.iterations_used = trace.iterations_used;
    report.converged = trace.converged;
    report.cycle_detected = trace.cycle_detected;
    report.histogram_before = histogram(img);
    report.histogram_after = histogram(out);
    return {std::move(out), std::move(report)};
}

std::string serialize_report(const EnhanceReport& r, bool include_histograms) {
    std::string out = "{\n";
    append_real_field(out, "x1", r.nodes.x1);
    append_real_field(out, "c1", r.nodes.c1);
    append_real_field(out, "c2", r.nodes.c2);
    append_real_field(out, "x2", r.nodes.x2);
    append_real_field(out, "g1", r.targets.g1);
    append_real_field(out, "gc1", r.targets.gc1);
    append_real_field(out, "gc2", r.targets.gc2);
    append_real_field(out, "g2", r.targets.g2);
    append_real_field(out, "gamma", r.gamma);
    append_real_field(out, "alpha1", r.alpha1);
    append_real_field(out, "alpha2", r.alpha2);
    out += "  \"iterations\": " + std::to_string(r.iterations_used) + ",\n";
    out += std::string("  \"converged\": ") + (r.converged ? "true" : "false") + ",\n";
    out += std::string("  \"cycle_detected\": ") + (r.cycle_detected ? "true" : "false");
    if (include_histograms) {
        out += ",\n";
        append_histogram_field(out, "histogram_before", r.histogram_before);
        append_histogram_field(out, "histogram_after", r.histogram_after, /*last=*/true);
    } else {
        out += "\n";
    }
    out += "}\n";
    return out;
}

} // namespace homotone
