#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vqm/errors.hpp"
#include "vqm/ingest.hpp"
#include "vqm/lane_runner.hpp"
#include "vqm/output.hpp"
#include "vqm/selftest.hpp"

namespace {

// Exit codes: 0 success, 1 usage, 2 data error, 3 selftest failure.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitSelftest = 3;

struct Destination {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    // False when the file cannot be opened.
    bool open(const std::string& path) {
        if (path.empty()) return true;
        file.open(path, std::ios::binary);
        if (!file) return false;
        stream = &file;
        return true;
    }
};

struct AnalyzeArgs {
    std::string input;
    std::string format;
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    std::uint32_t lanes = 6;
    std::string output = "csv";
    std::string out_file;
};

int cmd_analyze(const AnalyzeArgs& a) {
    if (a.format == "raw" && (a.width == 0 || a.height == 0)) {
        std::cerr << "vqm: raw input requires --width and --height\n";
        return kExitUsage;
    }
    Destination dest;
    if (!dest.open(a.out_file)) {
        std::cerr << "vqm: cannot open output file: " << a.out_file << "\n";
        return kExitData;
    }
    try {
        std::unique_ptr<vqm::FrameSource> src =
            a.format == "raw" ? vqm::open_raw_source(a.input, {a.width, a.height})
                              : vqm::open_y4m_source(a.input);
        vqm::LaneConfig cfg;
        cfg.lanes = a.lanes;
        if (a.output == "csv") {
            *dest.stream << vqm::analyze_csv_header() << '\n';
            vqm::run_pipeline(*src, cfg, [&](const vqm::FrameResult& r) {
                *dest.stream << vqm::analyze_csv_row(vqm::make_output_row(r)) << '\n';
            });
        } else {
            std::vector<vqm::OutputRow> rows;
            vqm::run_pipeline(*src, cfg, [&](const vqm::FrameResult& r) {
                rows.push_back(vqm::make_output_row(r));
            });
            *dest.stream << vqm::analyze_json(rows) << '\n';
        }
    } catch (const std::exception& e) {
        std::cerr << "vqm: " << e.what() << '\n';
        return kExitData;
    }
    return kExitOk;
}

bool parse_resolution(const std::string& text, vqm::Resolution& out) {
    const std::size_t sep = text.find('x');
    if (sep == std::string::npos) return false;
    const char* b = text.data();
    auto r1 = std::from_chars(b, b + sep, out.width);
    auto r2 = std::from_chars(b + sep + 1, b + text.size(), out.height);
    return r1.ec == std::errc() && r1.ptr == b + sep && r2.ec == std::errc() &&
           r2.ptr == b + text.size();
}

struct BenchArgs {
    std::vector<std::string> resolutions;
    std::vector<std::uint32_t> lanes;
    std::uint64_t frames = 100;
    std::uint64_t seed = 1;
    std::string output = "text";
    std::string out_file;
};

int cmd_bench(const BenchArgs& a) {
    std::vector<vqm::Resolution> res_list;
    if (a.resolutions.empty()) {
        res_list = {{320, 240}, {640, 480}, {1920, 1080}, {4096, 2160}, {7680, 4320}};
    } else {
        for (const std::string& text : a.resolutions) {
            vqm::Resolution res;
            if (!parse_resolution(text, res)) {
                std::cerr << "vqm: bad resolution '" << text << "', expected WIDTHxHEIGHT\n";
                return kExitUsage;
            }
            res_list.push_back(res);
        }
    }
    const std::vector<std::uint32_t> lanes = a.lanes.empty() ? std::vector<std::uint32_t>{1, 6}
                                                             : a.lanes;
    Destination dest;
    if (!dest.open(a.out_file)) {
        std::cerr << "vqm: cannot open output file: " << a.out_file << "\n";
        return kExitData;
    }
    try {
        const vqm::BenchReport rep = vqm::benchmark(res_list, lanes, a.frames, a.seed);
        if (a.output == "text") {
            *dest.stream << vqm::bench_text(rep);
        } else if (a.output == "csv") {
            *dest.stream << vqm::bench_csv(rep);
        } else {
            *dest.stream << vqm::bench_json(rep) << '\n';
        }
    } catch (const std::exception& e) {
        std::cerr << "vqm: " << e.what() << '\n';
        return kExitData;
    }
    return kExitOk;
}

int cmd_selftest(std::uint64_t seed, std::uint64_t trials) {
    const vqm::SelftestReport rep = vqm::run_selftest(seed, trials);
    std::cout << "selftest: trials=" << rep.trials << " failures=" << rep.failures << '\n';
    std::cout << "exposure means: hw=" << vqm::format_double(rep.mean_exposure_hw)
              << " block-mean-variant=" << vqm::format_double(rep.mean_exposure_means) << " (over "
              << rep.means_exposure_frames << " frames)\n";
    if (rep.passed()) {
        std::cout << "PASS\n";
        return kExitOk;
    }
    for (const vqm::SelftestFailure& f : rep.failure_samples) {
        std::cout << "  trial " << f.trial << " size " << f.res.width << "x" << f.res.height
                  << " seed " << f.frame_seed << ":";
        for (const std::string& field : f.fields) std::cout << ' ' << field;
        std::cout << '\n';
    }
    std::cout << "FAIL\n";
    return kExitSelftest;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vqm: no-reference per-frame video quality metrics"};
    app.require_subcommand(1);

    AnalyzeArgs aa;
    CLI::App* analyze = app.add_subcommand("analyze", "Per-frame metric table for a video file");
    analyze->add_option("--input", aa.input, "input video file")->required();
    analyze->add_option("--format", aa.format, "input container: raw or y4m")
        ->required()
        ->check(CLI::IsMember({"raw", "y4m"}));
    analyze->add_option("--width", aa.width, "frame width (raw only)");
    analyze->add_option("--height", aa.height, "frame height (raw only)");
    analyze->add_option("--lanes", aa.lanes, "parallel lanes")->check(CLI::PositiveNumber);
    analyze->add_option("--output", aa.output, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    analyze->add_option("--out-file", aa.out_file, "write to file instead of stdout");

    BenchArgs ba;
    CLI::App* bench = app.add_subcommand("bench", "Throughput sweep over synthetic frames");
    bench->add_option("--resolutions", ba.resolutions,
                      "comma-separated WIDTHxHEIGHT list (default: 320x240,640x480,"
                      "1920x1080,4096x2160,7680x4320)")
        ->delimiter(',');
    bench->add_option("--lanes", ba.lanes, "comma-separated lane counts (default: 1,6)")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    bench->add_option("--frames", ba.frames, "frames per (resolution, lanes) point")
        ->check(CLI::PositiveNumber);
    bench->add_option("--seed", ba.seed, "synthetic frame seed");
    bench->add_option("--output", ba.output, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    bench->add_option("--out-file", ba.out_file, "write to file instead of stdout");

    std::uint64_t st_seed = 1;
    std::uint64_t st_trials = 1000;
    CLI::App* selftest = app.add_subcommand("selftest", "Engine vs oracle equivalence check");
    selftest->add_option("--seed", st_seed, "trial seed");
    selftest->add_option("--trials", st_trials, "number of random frames");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (*analyze) return cmd_analyze(aa);
    if (*bench) return cmd_bench(ba);
    if (*selftest) return cmd_selftest(st_seed, st_trials);
    return kExitUsage;
}
