#ifndef VQM_SYNTHETIC_HPP
#define VQM_SYNTHETIC_HPP

#include <cstdint>
#include <memory>

#include "vqm/frame.hpp"
#include "vqm/ingest.hpp"

namespace vqm {

// Test-pattern and pseudorandom frame builders shared by the benchmark,
// the selftest and the test suites. Everything is deterministic in
// (seed, frame index).

// splitmix64 finalizer; the one bit-mixing primitive behind every
// deterministic draw here.
std::uint64_t mix64(std::uint64_t x);

Frame constant_frame(Resolution res, std::uint8_t value, std::uint64_t index = 0);

// Rows alternate odd_value / even_value (1-indexed rows; row 1 gets
// odd_value): the canonical comb pattern every microblock detects.
Frame comb_frame(Resolution res, std::uint8_t odd_value = 100, std::uint8_t even_value = 50,
                 std::uint64_t index = 0);

// Uniform pseudorandom bytes.
Frame random_frame(Resolution res, std::uint64_t seed, std::uint64_t index = 0);

// Rotates through pattern families (uniform noise, near-constant,
// noisy comb, gradients) so that streamed sequences exercise all metric
// paths, not just the noise regime.
Frame patterned_frame(Resolution res, std::uint64_t seed, std::uint64_t index);

enum class SyntheticKind { Random, Patterned };

// Bounded in-memory frame generator usable wherever a file source is.
class SyntheticSource final : public FrameSource {
public:
    SyntheticSource(Resolution res, std::uint64_t frames, std::uint64_t seed,
                    SyntheticKind kind = SyntheticKind::Random);

    Resolution resolution() const override { return res_; }
    std::optional<Frame> next() override;

private:
    Resolution res_;
    std::uint64_t frames_;
    std::uint64_t seed_;
    SyntheticKind kind_;
    std::uint64_t next_index_ = 0;
};

}  // namespace vqm

#endif  // VQM_SYNTHETIC_HPP
