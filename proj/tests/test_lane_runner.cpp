#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "vqm/errors.hpp"
#include "vqm/lane_runner.hpp"
#include "vqm/synthetic.hpp"

using namespace vqm;
using testutil::VectorSource;

namespace {

std::vector<FrameResult> collect(FrameSource& src, std::uint32_t lanes,
                                 std::uint32_t queue_capacity = 4) {
    LaneConfig cfg;
    cfg.lanes = lanes;
    cfg.queue_capacity = queue_capacity;
    std::vector<FrameResult> out;
    run_pipeline(src, cfg, [&](const FrameResult& r) { out.push_back(r); });
    return out;
}

std::vector<Frame> mixed_frames(std::size_t n, std::uint64_t seed) {
    std::vector<Frame> frames;
    frames.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        frames.push_back(patterned_frame({48, 32}, seed, i));
    }
    return frames;
}

}  // namespace

TEST_SUITE("lane_runner") {

TEST_CASE("empty source shuts down cleanly") {
    VectorSource src({});
    CHECK(collect(src, 6).empty());
}

TEST_CASE("two frames on six lanes arrive in order") {
    VectorSource src(mixed_frames(2, 1));
    const auto results = collect(src, 6);
    REQUIRE(results.size() == 2);
    CHECK(results[0].metrics.frame_index == 0);
    CHECK(results[1].metrics.frame_index == 1);
}

TEST_CASE("results are identical for any lane count") {
    const auto frames = mixed_frames(30, 42);
    VectorSource one(frames), two(frames), six(frames);
    const auto r1 = collect(one, 1);
    const auto r2 = collect(two, 2);
    const auto r6 = collect(six, 6);
    REQUIRE(r1.size() == 30);
    CHECK(r1 == r2);
    CHECK(r1 == r6);
}

TEST_CASE("tight queues make progress") {
    VectorSource src(mixed_frames(16, 7));
    CHECK(collect(src, 3, 1).size() == 16);
}

TEST_CASE("ingest errors surface after in-order delivery of earlier frames") {
    testutil::FailingSource src(mixed_frames(2, 5),
                                [] { throw TruncatedFrame("simulated torn tail"); });
    LaneConfig cfg;
    std::size_t delivered = 0;
    CHECK_THROWS_AS(run_pipeline(src, cfg, [&](const FrameResult&) { ++delivered; }),
                    TruncatedFrame);
    CHECK(delivered == 2);
}

TEST_CASE("a failing lane aborts the run and names the frame") {
    auto frames = mixed_frames(4, 9);
    Frame poison;  // 8x8 cannot host a shifted block; the worker rejects it
    poison.res = {8, 8};
    poison.luma.assign(64, 0);
    frames.push_back(poison);
    VectorSource src(std::move(frames));

    LaneConfig cfg;
    try {
        run_pipeline(src, cfg, nullptr);
        FAIL("expected the poisoned frame to abort the run");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("frame 4") != std::string::npos);
    }
}

TEST_CASE("benchmark rows are self-consistent") {
    const BenchReport rep = benchmark({{32, 32}, {48, 48}}, {1, 2}, 5, 123);
    REQUIRE(rep.rows.size() == 4);
    CHECK(rep.reference_bytes_per_second == kReferenceBytesPerSecond);
    for (const BenchRow& row : rep.rows) {
        CHECK(row.frames == 5);
        CHECK(row.seconds > 0.0);
        CHECK(row.fps > 0.0);
        const double plane = static_cast<double>(row.res.width) * static_cast<double>(row.res.height);
        CHECK(row.bytes_per_second == row.fps * plane);
        CHECK(row.real_time == (row.fps >= kRealTimeFps));
    }
}

}  // TEST_SUITE
