#ifndef VQM_ENGINE_HPP
#define VQM_ENGINE_HPP

#include <array>
#include <cstdint>
#include <optional>

#include "vqm/frame.hpp"
#include "vqm/serializer.hpp"

namespace vqm {

// Initial value of the minimum chain; strictly above the largest possible
// block sum (16320) so the first real block always displaces it.
inline constexpr std::uint16_t kMinSentinel = 16384;

struct EngineConfig {
    // Blackout threshold on the spread of block sums.
    std::uint32_t th_blout = 4;
};

// The register file of the streaming datapath. All widths match the
// hardware: 32-bit metric accumulators, 16-bit block sums.
struct EngineState {
    std::uint32_t inter_sum = 0;
    std::uint32_t intra_sum = 0;
    std::uint16_t block_sum = 0;
    // Four smallest block sums, ascending.
    std::array<std::uint16_t, 4> min_chain{kMinSentinel, kMinSentinel, kMinSentinel, kMinSentinel};
    // Four largest block sums, descending.
    std::array<std::uint16_t, 4> max_chain{0, 0, 0, 0};
    std::uint32_t interlace_count = 0;
    std::uint32_t microblock_counter = 0;
};

// Sorted insert of a completed block sum into both extreme chains.
// A sum below min_chain[3] shifts the tail down; a sum above max_chain[3]
// shifts that tail up. Comparisons are strict, so duplicates land one slot
// deeper each time.
void insert_extreme(EngineState& state, std::uint16_t sum);

// Applies one payload word to every metric accumulator: blockiness pair
// sums by microblock kind, block-sum accumulation with extreme insertion
// on each 4th word, the comb test, and the microblock counter. Does not
// bounds-check against frame geometry; Engine does.
void consume_word(EngineState& state, const DataWord& w);

// The 128-bit result record sent downstream once per frame:
//   bits[31:0]   inter_sum       bits[63:32] intra_sum
//   bits[95:64]  interlace_count bits[111:96] exposure
//   bit[112]     blackout        bits[127:113] zero
struct MetricRecord {
    std::uint32_t inter_sum = 0;
    std::uint32_t intra_sum = 0;
    std::uint32_t interlace_count = 0;
    std::uint16_t exposure = 0;
    bool blackout = false;

    friend bool operator==(const MetricRecord&, const MetricRecord&) = default;
};

DataWord encode_record(const MetricRecord& rec);
MetricRecord decode_record(const DataWord& w);

// Per-frame metric values after the software post-processing step.
struct FrameMetrics {
    std::uint64_t frame_index = 0;
    // Empty when inter_sum was 0 (a frame with no boundary evidence).
    std::optional<double> blockiness;
    std::uint16_t exposure = 0;
    bool blackout = false;
    double interlace = 0.0;

    friend bool operator==(const FrameMetrics&, const FrameMetrics&) = default;
};

FrameMetrics record_to_metrics(const MetricRecord& rec, const GridGeometry& geom,
                               std::uint64_t frame_index);

// Stream consumer for one lane: validates the wire protocol around the
// EngineState updates and resets the registers after each frame.
class Engine {
public:
    explicit Engine(const GridGeometry& geom, EngineConfig cfg = {});

    // First word of every frame. Throws ResolutionMismatch if it does not
    // announce the geometry this engine was built for.
    void consume_header(const DataWord& w);

    // Payload words, in serializer order. Throws WordOverrun past the
    // 4 * shifted_blocks words of one frame.
    void consume(const DataWord& w);

    // Packs the record and resets the registers for the next frame.
    // Throws FrameIncomplete unless exactly 4 * shifted_blocks payload
    // words were consumed.
    MetricRecord finalize();

    // Convenience wrapper: header + payload + finalize for a whole frame.
    MetricRecord process(const std::vector<DataWord>& words);

    const EngineState& state() const { return state_; }
    EngineState& state() { return state_; }
    const GridGeometry& geometry() const { return geom_; }
    const EngineConfig& config() const { return cfg_; }

private:
    GridGeometry geom_;
    EngineConfig cfg_;
    EngineState state_;
};

// Record assembly on raw state, exposed for direct testing. Exposure is
// the truncating-shift mean of the eight chain values; blackout compares
// the extreme spread against the threshold with a strict greater-than.
MetricRecord assemble_record(const EngineState& state, const EngineConfig& cfg);

}  // namespace vqm

#endif  // VQM_ENGINE_HPP
