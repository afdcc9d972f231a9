#ifndef VQM_LANE_RUNNER_HPP
#define VQM_LANE_RUNNER_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "vqm/engine.hpp"
#include "vqm/ingest.hpp"

namespace vqm {

struct LaneConfig {
    std::uint32_t lanes = 6;
    // Per-lane input queue depth, in frames. Backpressure bound: at most
    // lanes * queue_capacity frames are resident at once.
    std::uint32_t queue_capacity = 4;
    EngineConfig engine;
};

// What one frame produces: the raw wire record and its decoded metrics.
struct FrameResult {
    FrameMetrics metrics;
    MetricRecord record;

    friend bool operator==(const FrameResult&, const FrameResult&) = default;
};

using MetricsSink = std::function<void(const FrameResult&)>;

struct RunSummary {
    std::uint64_t frames = 0;
    double seconds = 0.0;
};

// Drains the source through `lanes` parallel serializer+engine workers.
// Frame i goes to lane i % lanes; the collector releases results to the
// sink in strictly ascending frame order. Output is identical for any
// lane count. Ingest errors propagate as-is after worker shutdown; a
// failing lane aborts the run with a diagnostic naming the frame index.
RunSummary run_pipeline(FrameSource& src, const LaneConfig& cfg, const MetricsSink& sink);

struct BenchRow {
    Resolution res;
    std::uint32_t lanes = 0;
    std::uint64_t frames = 0;
    double seconds = 0.0;
    double fps = 0.0;
    double bytes_per_second = 0.0;  // fps * width * height
    bool real_time = false;         // fps >= 30
};

// Throughput of the original six-lane FPGA implementation, kept in
// reports as a fixed point of comparison.
inline constexpr double kReferenceBytesPerSecond = 2.19e9;
inline constexpr double kRealTimeFps = 30.0;

struct BenchReport {
    std::vector<BenchRow> rows;
    double reference_bytes_per_second = kReferenceBytesPerSecond;
};

// Measures run_pipeline over seeded pseudorandom frames for every
// (resolution, lane count) pair.
BenchReport benchmark(const std::vector<Resolution>& resolutions,
                      const std::vector<std::uint32_t>& lanes_list,
                      std::uint64_t frames_per_point, std::uint64_t seed,
                      std::uint32_t queue_capacity = 4);

}  // namespace vqm

#endif  // VQM_LANE_RUNNER_HPP
