#include "vqm/engine.hpp"

#include <string>

#include "vqm/errors.hpp"

namespace vqm {

namespace {

inline std::uint32_t absdiff(std::uint8_t a, std::uint8_t b) {
    return a > b ? static_cast<std::uint32_t>(a - b) : static_cast<std::uint32_t>(b - a);
}

template <typename Cmp>
bool comb_pattern(const std::array<std::uint8_t, 16>& p, Cmp cmp) {
    for (int c = 0; c < 16; c += 4) {
        if (!cmp(p[c], p[c + 1])) return false;      // row 1 vs row 2
        if (!cmp(p[c + 2], p[c + 1])) return false;  // row 3 vs row 2
        if (!cmp(p[c + 2], p[c + 3])) return false;  // row 3 vs row 4
    }
    return true;
}

inline bool is_interlace(const MicroblockPixels& px) {
    return comb_pattern(px.p, [](std::uint8_t a, std::uint8_t b) { return a > b; }) ||
           comb_pattern(px.p, [](std::uint8_t a, std::uint8_t b) { return a < b; });
}

}  // namespace

void insert_extreme(EngineState& state, std::uint16_t sum) {
    auto& mn = state.min_chain;
    if (sum < mn[3]) {
        if (sum < mn[2]) {
            if (sum < mn[1]) {
                if (sum < mn[0]) {
                    mn[3] = mn[2];
                    mn[2] = mn[1];
                    mn[1] = mn[0];
                    mn[0] = sum;
                } else {
                    mn[3] = mn[2];
                    mn[2] = mn[1];
                    mn[1] = sum;
                }
            } else {
                mn[3] = mn[2];
                mn[2] = sum;
            }
        } else {
            mn[3] = sum;
        }
    }

    auto& mx = state.max_chain;
    if (sum > mx[3]) {
        if (sum > mx[2]) {
            if (sum > mx[1]) {
                if (sum > mx[0]) {
                    mx[3] = mx[2];
                    mx[2] = mx[1];
                    mx[1] = mx[0];
                    mx[0] = sum;
                } else {
                    mx[3] = mx[2];
                    mx[2] = mx[1];
                    mx[1] = sum;
                }
            } else {
                mx[3] = mx[2];
                mx[2] = sum;
            }
        } else {
            mx[3] = sum;
        }
    }
}

void consume_word(EngineState& state, const DataWord& w) {
    const MicroblockPixels px = unpack_word(w);
    const auto& p = px.p;

    switch (microblock_kind(state.microblock_counter)) {
        case MicroblockKind::TL:
            break;
        case MicroblockKind::TR:
            // Vertical boundary between microblock columns 3|4.
            state.intra_sum += absdiff(p[8], p[4]) + absdiff(p[9], p[5]) +
                               absdiff(p[10], p[6]) + absdiff(p[11], p[7]);
            state.inter_sum += absdiff(p[8], p[12]) + absdiff(p[9], p[13]) +
                               absdiff(p[10], p[14]) + absdiff(p[11], p[15]);
            break;
        case MicroblockKind::BL:
            // Horizontal boundary between microblock rows 3|4.
            state.intra_sum += absdiff(p[1], p[2]) + absdiff(p[5], p[6]) +
                               absdiff(p[9], p[10]) + absdiff(p[13], p[14]);
            state.inter_sum += absdiff(p[3], p[2]) + absdiff(p[7], p[6]) +
                               absdiff(p[11], p[10]) + absdiff(p[15], p[14]);
            break;
        case MicroblockKind::BR:
            // Corner microblock: two samples of each boundary direction.
            state.intra_sum += absdiff(p[8], p[4]) + absdiff(p[7], p[11]) +
                               absdiff(p[1], p[2]) + absdiff(p[13], p[14]);
            state.inter_sum += absdiff(p[8], p[12]) + absdiff(p[11], p[15]) +
                               absdiff(p[3], p[2]) + absdiff(p[14], p[15]);
            break;
    }

    std::uint16_t word_sum = 0;
    for (std::uint8_t v : p) word_sum = static_cast<std::uint16_t>(word_sum + v);
    state.block_sum = static_cast<std::uint16_t>(state.block_sum + word_sum);
    if (state.microblock_counter % 4 == 3) {
        insert_extreme(state, state.block_sum);
        state.block_sum = 0;
    }

    if (is_interlace(px)) {
        state.interlace_count += 1;
    }

    state.microblock_counter += 1;
}

MetricRecord assemble_record(const EngineState& state, const EngineConfig& cfg) {
    MetricRecord rec;
    rec.inter_sum = state.inter_sum;
    rec.intra_sum = state.intra_sum;
    rec.interlace_count = state.interlace_count;

    // Mean of the eight extreme sums via truncating shifts: each datum
    // >>2 keeps the running total inside 16 bits, the final >>7 completes
    // the division by 512 = 8 * 64.
    std::uint16_t acc = 0;
    for (std::uint16_t v : state.max_chain) acc = static_cast<std::uint16_t>(acc + (v >> 2));
    for (std::uint16_t v : state.min_chain) acc = static_cast<std::uint16_t>(acc + (v >> 2));
    rec.exposure = static_cast<std::uint16_t>(acc >> 7);

    const std::uint16_t spread = static_cast<std::uint16_t>(state.max_chain[0] - state.min_chain[0]);
    rec.blackout = !(static_cast<std::uint32_t>(spread) > cfg.th_blout);
    return rec;
}

DataWord encode_record(const MetricRecord& rec) {
    DataWord w;
    auto put32 = [&w](int offset, std::uint32_t v) {
        w.bytes[offset + 0] = static_cast<std::uint8_t>(v & 0xff);
        w.bytes[offset + 1] = static_cast<std::uint8_t>((v >> 8) & 0xff);
        w.bytes[offset + 2] = static_cast<std::uint8_t>((v >> 16) & 0xff);
        w.bytes[offset + 3] = static_cast<std::uint8_t>((v >> 24) & 0xff);
    };
    put32(0, rec.inter_sum);
    put32(4, rec.intra_sum);
    put32(8, rec.interlace_count);
    w.bytes[12] = static_cast<std::uint8_t>(rec.exposure & 0xff);
    w.bytes[13] = static_cast<std::uint8_t>((rec.exposure >> 8) & 0xff);
    w.bytes[14] = rec.blackout ? 0x01 : 0x00;
    return w;
}

MetricRecord decode_record(const DataWord& w) {
    auto get32 = [&w](int offset) {
        return static_cast<std::uint32_t>(w.bytes[offset + 0]) |
               (static_cast<std::uint32_t>(w.bytes[offset + 1]) << 8) |
               (static_cast<std::uint32_t>(w.bytes[offset + 2]) << 16) |
               (static_cast<std::uint32_t>(w.bytes[offset + 3]) << 24);
    };
    MetricRecord rec;
    rec.inter_sum = get32(0);
    rec.intra_sum = get32(4);
    rec.interlace_count = get32(8);
    rec.exposure = static_cast<std::uint16_t>(static_cast<std::uint16_t>(w.bytes[12]) |
                                              (static_cast<std::uint16_t>(w.bytes[13]) << 8));
    rec.blackout = (w.bytes[14] & 0x01) != 0;
    return rec;
}

FrameMetrics record_to_metrics(const MetricRecord& rec, const GridGeometry& geom,
                               std::uint64_t frame_index) {
    FrameMetrics m;
    m.frame_index = frame_index;
    if (rec.inter_sum != 0) {
        m.blockiness = static_cast<double>(rec.intra_sum) / static_cast<double>(rec.inter_sum);
    }
    m.exposure = rec.exposure;
    m.blackout = rec.blackout;
    m.interlace = static_cast<double>(rec.interlace_count) /
                  (4.0 * static_cast<double>(geom.shifted_blocks));
    return m;
}

Engine::Engine(const GridGeometry& geom, EngineConfig cfg) : geom_(geom), cfg_(cfg) {}

void Engine::consume_header(const DataWord& w) {
    const Resolution res = header_resolution(w);
    if (res != geom_.res) {
        throw ResolutionMismatch("stream header announces " + std::to_string(res.width) + "x" +
                                 std::to_string(res.height) + ", engine holds " +
                                 std::to_string(geom_.res.width) + "x" +
                                 std::to_string(geom_.res.height));
    }
}

void Engine::consume(const DataWord& w) {
    if (state_.microblock_counter >= geom_.microblocks) {
        throw WordOverrun("payload word " + std::to_string(state_.microblock_counter + 1) +
                          " exceeds the " + std::to_string(geom_.microblocks) +
                          " microblocks of this geometry");
    }
    consume_word(state_, w);
}

MetricRecord Engine::finalize() {
    if (state_.microblock_counter != geom_.microblocks) {
        throw FrameIncomplete("frame finalized after " + std::to_string(state_.microblock_counter) +
                              " of " + std::to_string(geom_.microblocks) + " payload words");
    }
    const MetricRecord rec = assemble_record(state_, cfg_);
    state_ = EngineState{};
    return rec;
}

MetricRecord Engine::process(const std::vector<DataWord>& words) {
    if (words.empty()) {
        throw FrameIncomplete("empty word sequence");
    }
    consume_header(words.front());
    for (std::size_t i = 1; i < words.size(); ++i) {
        consume(words[i]);
    }
    return finalize();
}

}  // namespace vqm
