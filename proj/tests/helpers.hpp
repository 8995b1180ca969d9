#pragma once

// Shared test machinery: deterministic generators, an independent
// re-implementation of the node iteration, a KS statistic, a tiny XML
// well-formedness scan, and a CLI process runner.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <string>
#include <sys/wait.h>
#include <utility>
#include <vector>

#include "homotone/image.hpp"
#include "homotone/statistics.hpp"
#include "homotone/transfer.hpp"

namespace testutil {

inline homotone::GrayImage make_image(int w, int h, int maxval,
                                      const std::vector<int>& samples) {
    homotone::GrayImage img;
    img.width = w;
    img.height = h;
    img.maxval = maxval;
    img.samples.reserve(samples.size());
    for (int s : samples) img.samples.push_back(static_cast<std::uint16_t>(s));
    return img;
}

inline homotone::GrayImage ramp_image(int maxval) {
    homotone::GrayImage img;
    img.width = maxval + 1;
    img.height = 1;
    img.maxval = maxval;
    img.samples.resize(static_cast<std::size_t>(maxval) + 1);
    for (int i = 0; i <= maxval; ++i) img.samples[i] = static_cast<std::uint16_t>(i);
    return img;
}

inline homotone::GrayImage random_image(std::mt19937& rng, int w, int h, int maxval) {
    std::uniform_int_distribution<int> dist(0, maxval);
    homotone::GrayImage img;
    img.width = w;
    img.height = h;
    img.maxval = maxval;
    img.samples.resize(static_cast<std::size_t>(w) * h);
    for (auto& s : img.samples) s = static_cast<std::uint16_t>(dist(rng));
    return img;
}

// Reference run of the interwoven iteration, written against the histogram
// with unit-domain comparisons rather than the library's integer-threshold
// pixel loop. Same update rule, same stopping rules.
struct SimResult {
    double c1 = 0.0;
    double c2 = 0.0;
    bool converged = false;
    bool cycle_detected = false;
    int iterations = 0;
};

inline SimResult simulate_interwoven(const homotone::GrayImage& img, double epsilon,
                                     int max_iters) {
    const int L = img.maxval;
    std::vector<std::uint64_t> bins(static_cast<std::size_t>(L) + 1, 0);
    for (auto s : img.samples) ++bins[s];

    int lo = 0, hi = L;
    while (bins[lo] == 0) ++lo;
    while (bins[hi] == 0) --hi;
    const double x1 = static_cast<double>(lo) / L;
    const double x2 = static_cast<double>(hi) / L;

    long double acc = 0.0L;
    for (int v = 0; v <= L; ++v) acc += static_cast<long double>(bins[v]) * v;
    const double mean =
        static_cast<double>(acc / (static_cast<long double>(L) * img.samples.size()));

    auto step = [&](double c1, double c2, double& n1, double& n2) {
        long double s1 = 0.0L, s2 = 0.0L;
        std::uint64_t k1 = 0, k2 = 0;
        for (int v = 0; v <= L; ++v) {
            if (bins[v] == 0) continue;
            const double u = static_cast<double>(v) / L;
            if (u <= c2) {
                k1 += bins[v];
                s1 += static_cast<long double>(bins[v]) * u;
            }
            if (u >= c1) {
                k2 += bins[v];
                s2 += static_cast<long double>(bins[v]) * u;
            }
        }
        n1 = static_cast<double>(s1 / k1);
        n2 = static_cast<double>(s2 / k2);
    };

    SimResult r;
    double c1 = (x1 + mean) / 2.0, c2 = (mean + x2) / 2.0;
    double p1 = c1, p2 = c2; // iterate m-1
    bool have_prev = false;
    for (int m = 0; m < max_iters; ++m) {
        double n1, n2;
        step(c1, c2, n1, n2);
        ++r.iterations;
        if (std::abs(n1 - c1) < epsilon && std::abs(n2 - c2) < epsilon) {
            r.converged = true;
            r.c1 = n1;
            r.c2 = n2;
            return r;
        }
        if (have_prev && std::abs(n1 - p1) < epsilon && std::abs(n2 - p2) < epsilon) {
            r.cycle_detected = true;
            r.c1 = (n1 + c1) / 2.0;
            r.c2 = (n2 + c2) / 2.0;
            return r;
        }
        p1 = c1;
        p2 = c2;
        have_prev = true;
        c1 = n1;
        c2 = n2;
        r.c1 = n1;
        r.c2 = n2;
    }
    return r;
}

// Kolmogorov-Smirnov distance between the sample distribution and the
// discrete uniform on {0..maxval}: sup over levels v of
// |F(v) - (v+1)/(maxval+1)|.
inline double ks_to_uniform(const homotone::Histogram& h) {
    const std::size_t levels = h.bins.size();
    double cum = 0.0, worst = 0.0;
    for (std::size_t v = 0; v < levels; ++v) {
        cum += static_cast<double>(h.bins[v]) / static_cast<double>(h.total);
        const double uniform = static_cast<double>(v + 1) / static_cast<double>(levels);
        worst = std::max(worst, std::abs(cum - uniform));
    }
    return worst;
}

// Strictly ordered node/target pair with every gap at least min_gap, both
// families inside [0,1].
struct FitCase {
    homotone::NodeSet nodes;
    homotone::TargetLevels targets;
};

inline std::array<double, 4> ordered_quad(std::mt19937& rng, double min_gap) {
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    for (;;) {
        std::array<double, 4> q{dist(rng), dist(rng), dist(rng), dist(rng)};
        std::sort(q.begin(), q.end());
        if (q[1] - q[0] >= min_gap && q[2] - q[1] >= min_gap && q[3] - q[2] >= min_gap)
            return q;
    }
}

// The g2-weight w(x) = 1/(1 + (a1/a2)(u/v)^gamma) evaluated in the log
// domain. Used to pre-screen fit cases: when w underflows at the first or
// last interior grid point the double-precision curve plateaus there and
// strict monotonicity is unrepresentable.
inline double analytic_weight(const homotone::TransferFunction& t, double x) {
    const double u = t.nodes.x2 - x;
    const double v = x - t.nodes.x1;
    const double e = std::log(t.alpha1) - std::log(t.alpha2) + t.gamma * std::log(u / v);
    if (e >= 0.0) return std::exp(-e) / (1.0 + std::exp(-e));
    return 1.0 / (1.0 + std::exp(e));
}

// Draws node/target pairs until the fitted curve is representable on an
// n_grid-point uniform grid: finite coefficients and no weight underflow at
// the interior endpoints.
inline FitCase conditioned_fit_case(std::mt19937& rng, double min_gap, int n_grid,
                                    int* redraws = nullptr) {
    for (;;) {
        FitCase fc;
        const auto n = ordered_quad(rng, min_gap);
        const auto g = ordered_quad(rng, min_gap);
        fc.nodes = {n[0], n[1], n[2], n[3]};
        fc.targets = {g[0], g[1], g[2], g[3]};
        homotone::TransferFunction t;
        try {
            t = homotone::fit_transfer(fc.nodes, fc.targets);
        } catch (const std::exception&) {
            if (redraws) ++*redraws;
            continue;
        }
        const double span = fc.nodes.x2 - fc.nodes.x1;
        const double lo = fc.nodes.x1 + span / (n_grid - 1);
        const double hi = fc.nodes.x2 - span / (n_grid - 1);
        if (analytic_weight(t, lo) < 1e-12 || 1.0 - analytic_weight(t, hi) < 1e-12) {
            if (redraws) ++*redraws;
            continue;
        }
        return fc;
    }
}

// Minimal XML tag-balance scan; enough to catch unclosed or misnested
// elements in the SVG emitters.
inline bool well_formed_xml(const std::string& text) {
    std::vector<std::string> stack;
    std::size_t i = 0;
    const std::size_t n = text.size();
    bool saw_root = false;
    while (i < n) {
        if (text[i] != '<') {
            ++i;
            continue;
        }
        if (text.compare(i, 2, "<?") == 0) {
            const auto end = text.find("?>", i);
            if (end == std::string::npos) return false;
            i = end + 2;
            continue;
        }
        if (text.compare(i, 4, "<!--") == 0) {
            const auto end = text.find("-->", i);
            if (end == std::string::npos) return false;
            i = end + 3;
            continue;
        }
        const auto close = text.find('>', i);
        if (close == std::string::npos) return false;
        std::string inside = text.substr(i + 1, close - i - 1);
        i = close + 1;
        if (inside.empty()) return false;
        if (inside.front() == '/') {
            const std::string name = inside.substr(1);
            if (stack.empty() || stack.back() != name) return false;
            stack.pop_back();
            continue;
        }
        const bool self_closing = inside.back() == '/';
        if (self_closing) inside.pop_back();
        const std::string name = inside.substr(0, inside.find_first_of(" \t\r\n"));
        if (name.empty()) return false;
        if (stack.empty() && saw_root) return false; // second root element
        if (!self_closing) stack.push_back(name);
        saw_root = true;
    }
    return stack.empty() && saw_root;
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
}

inline void write_bytes_file(const std::string& path, const std::vector<std::uint8_t>& b) {
    std::ofstream out(path, std::ios::binary);
    out.write(reinterpret_cast<const char*>(b.data()),
              static_cast<std::streamsize>(b.size()));
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

// Scratch directory shared by one test process.
inline const std::string& scratch_dir() {
    static const std::string dir = [] {
        std::string tmpl = "/tmp/homotone_tests_XXXXXX";
        if (!mkdtemp(tmpl.data())) std::abort();
        return tmpl;
    }();
    return dir;
}

#ifdef CLI_PATH
struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline CliResult run_cli(const std::string& args) {
    static int serial = 0;
    const std::string out_path = scratch_dir() + "/out." + std::to_string(serial);
    const std::string err_path = scratch_dir() + "/err." + std::to_string(serial);
    ++serial;
    const std::string cmd =
        std::string(CLI_PATH) + " " + args + " >" + out_path + " 2>" + err_path;
    const int status = std::system(cmd.c_str());
    CliResult r;
    r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    r.out = read_text_file(out_path);
    r.err = read_text_file(err_path);
    return r;
}
#endif

} // namespace testutil
