#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "homotone/errors.hpp"
#include "homotone/pgm.hpp"
#include "homotone/pipeline.hpp"
#include "homotone/plots.hpp"

namespace {

using namespace homotone;

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("read failed on '" + path + "'");
    return bytes;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw IoError("write failed on '" + path + "'");
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("write failed on '" + path + "'");
}

TargetLevels parse_targets(const std::string& spec) {
    TargetLevels t;
    char trailing = 0;
    const int got = std::sscanf(spec.c_str(), "%lf,%lf,%lf,%lf%c", &t.g1, &t.gc1, &t.gc2,
                                &t.g2, &trailing);
    if (got != 4)
        throw CLI::ValidationError("--targets", "expected four comma-separated reals, got '" +
                                                    spec + "'");
    if (!(t.g1 < t.gc1 && t.gc1 < t.gc2 && t.gc2 < t.g2))
        throw CLI::ValidationError("--targets",
                                   "levels must be strictly increasing, got '" + spec + "'");
    return t;
}

std::string real17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void print_fit_summary(const EnhanceReport& r) {
    std::cout << "gamma = " << real17(r.gamma) << "\n"
              << "alpha1 = " << real17(r.alpha1) << "\n"
              << "alpha2 = " << real17(r.alpha2) << "\n"
              << "x1 = " << real17(r.nodes.x1) << "\n"
              << "c1 = " << real17(r.nodes.c1) << "\n"
              << "c2 = " << real17(r.nodes.c2) << "\n"
              << "x2 = " << real17(r.nodes.x2) << "\n";
}

struct CommonOptions {
    double epsilon = 1e-4;
    int max_iters = 100;
    std::string targets_spec;

    void attach(CLI::App& cmd) {
        cmd.add_option("--epsilon", epsilon, "Stopping constant for the node iteration")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd.add_option("--max-iters", max_iters, "Iteration cap for the node search")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd.add_option("--targets", targets_spec,
                       "Target levels g1,gc1,gc2,g2 (default 0,1/3,2/3,1)");
    }

    IterationConfig iteration_config() const {
        IterationConfig cfg;
        cfg.epsilon = epsilon;
        cfg.max_iters = max_iters;
        return cfg;
    }

    TargetLevels target_levels() const {
        if (targets_spec.empty()) return TargetLevels{};
        return parse_targets(targets_spec);
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gray-level image enhancement with a homographic tone curve"};
    app.require_subcommand(1);

    // enhance
    auto* enhance_cmd = app.add_subcommand(
        "enhance", "Fit a tone curve to the image statistics and apply it");
    std::string enh_in, enh_out, enh_report, enh_format;
    CommonOptions enh_opts;
    enhance_cmd->add_option("input", enh_in, "Input PGM (P2 or P5)")->required();
    enhance_cmd->add_option("output", enh_out, "Output PGM path")->required();
    enh_opts.attach(*enhance_cmd);
    enhance_cmd->add_option("--report", enh_report, "Also write the fit report (JSON)");
    enhance_cmd
        ->add_option("--format", enh_format, "Output encoding (default: same as input)")
        ->check(CLI::IsMember({"p2", "p5"}, CLI::ignore_case));

    // analyze
    auto* analyze_cmd = app.add_subcommand(
        "analyze", "Print the fit report without writing an image");
    std::string ana_in;
    bool ana_full = false;
    CommonOptions ana_opts;
    analyze_cmd->add_option("input", ana_in, "Input PGM (P2 or P5)")->required();
    ana_opts.attach(*analyze_cmd);
    analyze_cmd->add_flag("--full", ana_full, "Include the before/after histograms");

    // curve
    auto* curve_cmd = app.add_subcommand(
        "curve", "Write the fitted transfer curve as CSV or SVG");
    std::string cur_in, cur_out, cur_format = "csv";
    CommonOptions cur_opts;
    curve_cmd->add_option("input", cur_in, "Input PGM (P2 or P5)")->required();
    curve_cmd->add_option("output", cur_out, "Output file path")->required();
    cur_opts.attach(*curve_cmd);
    curve_cmd->add_option("--format", cur_format, "csv or svg")
        ->check(CLI::IsMember({"csv", "svg"}, CLI::ignore_case));

    // histogram
    auto* hist_cmd = app.add_subcommand(
        "histogram", "Write the original or enhanced histogram as CSV or SVG");
    std::string his_in, his_out, his_format = "csv", his_which = "original";
    CommonOptions his_opts;
    hist_cmd->add_option("input", his_in, "Input PGM (P2 or P5)")->required();
    hist_cmd->add_option("output", his_out, "Output file path")->required();
    his_opts.attach(*hist_cmd);
    hist_cmd->add_option("--format", his_format, "csv or svg")
        ->check(CLI::IsMember({"csv", "svg"}, CLI::ignore_case));
    hist_cmd->add_option("--which", his_which, "original or enhanced")
        ->check(CLI::IsMember({"original", "enhanced"}, CLI::ignore_case));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (enhance_cmd->parsed()) {
            const auto bytes = read_file(enh_in);
            const PgmFormat source_format = detect_pgm_format(bytes);
            const GrayImage img = read_pgm(bytes);
            const auto [out, report] =
                enhance(img, enh_opts.target_levels(), enh_opts.iteration_config());
            PgmFormat out_format = source_format;
            if (enh_format == "p2" || enh_format == "P2") out_format = PgmFormat::P2;
            if (enh_format == "p5" || enh_format == "P5") out_format = PgmFormat::P5;
            write_file(enh_out, write_pgm(out, out_format));
            if (!enh_report.empty()) write_file(enh_report, serialize_report(report));
            print_fit_summary(report);
            return 0;
        }

        if (analyze_cmd->parsed()) {
            const GrayImage img = read_pgm(read_file(ana_in));
            const auto [out, report] =
                enhance(img, ana_opts.target_levels(), ana_opts.iteration_config());
            std::cout << serialize_report(report, /*include_histograms=*/ana_full);
            return 0;
        }

        if (curve_cmd->parsed()) {
            const GrayImage img = read_pgm(read_file(cur_in));
            auto [nodes, trace] = interwoven_means(img, cur_opts.iteration_config());
            const TransferFunction tf = fit_transfer(nodes, cur_opts.target_levels());
            const bool svg = cur_format == "svg" || cur_format == "SVG";
            write_file(cur_out, svg ? curve_svg(tf) : curve_csv(tf, 256));
            return 0;
        }

        if (hist_cmd->parsed()) {
            const GrayImage img = read_pgm(read_file(his_in));
            Histogram h;
            if (his_which == "enhanced") {
                const auto [out, report] =
                    enhance(img, his_opts.target_levels(), his_opts.iteration_config());
                h = report.histogram_after;
            } else {
                h = histogram(img);
            }
            const bool svg = his_format == "svg" || his_format == "SVG";
            write_file(his_out, svg ? histogram_svg(h) : histogram_csv(h));
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "homotone: " << e.what() << "\n";
        return 1;
    } catch (const MathError& e) {
        std::cerr << "homotone: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "homotone: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "homotone: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
