#ifndef VQM_OUTPUT_HPP
#define VQM_OUTPUT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vqm/lane_runner.hpp"

namespace vqm {

// Shortest text that parses back to the same double. Every format funnels
// doubles through this (or an encoder with the same shortest-round-trip
// guarantee), so CSV and structured output carry identical values.
std::string format_double(double v);

// One analyze output line, in fixed column order.
struct OutputRow {
    std::uint64_t frame_index = 0;
    std::optional<double> blockiness;  // empty cell / null when undefined
    std::uint16_t exposure = 0;
    bool blackout = false;  // rendered strictly as 0/1
    double interlace = 0.0;
    std::uint32_t inter_sum = 0;
    std::uint32_t intra_sum = 0;
};

OutputRow make_output_row(const FrameResult& r);

std::string analyze_csv_header();
std::string analyze_csv_row(const OutputRow& row);
std::string analyze_json(const std::vector<OutputRow>& rows);

std::string bench_text(const BenchReport& rep);
std::string bench_csv(const BenchReport& rep);
std::string bench_json(const BenchReport& rep);

}  // namespace vqm

#endif  // VQM_OUTPUT_HPP
