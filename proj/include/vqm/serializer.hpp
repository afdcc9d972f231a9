#ifndef VQM_SERIALIZER_HPP
#define VQM_SERIALIZER_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "vqm/frame.hpp"

namespace vqm {

// One 128-bit stream word. bytes[k] holds bits [8k+7 : 8k], so byte 0 is
// the least significant byte of the word.
struct DataWord {
    std::array<std::uint8_t, 16> bytes{};

    friend bool operator==(const DataWord&, const DataWord&) = default;
};

// Sixteen luma samples of a 4x4 microblock in column-major order:
// p[0..3] is column 1 top to bottom, p[4..7] column 2, p[8..11] column 3,
// p[12..15] column 4. Pixel names p1..p16 used elsewhere are 1-based.
struct MicroblockPixels {
    std::array<std::uint8_t, 16> p{};

    friend bool operator==(const MicroblockPixels&, const MicroblockPixels&) = default;
};

// Position of a microblock inside its shifted block. TR carries the
// vertical coding-block boundary (between its columns 3|4), BL the
// horizontal one (rows 3|4), BR both.
enum class MicroblockKind : std::uint8_t { TL = 0, TR = 1, BL = 2, BR = 3 };

constexpr MicroblockKind microblock_kind(std::uint32_t counter) {
    return static_cast<MicroblockKind>(counter % 4);
}

// Payload word: byte k holds p(k+1).
DataWord pack_microblock(const MicroblockPixels& px);
MicroblockPixels unpack_word(const DataWord& w);

// Header word: bits[15:0] = width, bits[31:16] = height, rest zero.
DataWord header_word(Resolution res);
Resolution header_resolution(const DataWord& w);

// Full wire sequence for one frame: the resolution header followed by
// 4 * shifted_blocks payload words. Shifted blocks go out in raster order
// (left to right, then top to bottom), each as TL, TR, BL, BR, each
// microblock packed column-major.
std::vector<DataWord> serialize_frame(const Frame& f);
void serialize_frame(const Frame& f, std::vector<DataWord>& out);

// Inverse of serialize_frame: rebuilds a full-size plane from a complete
// word sequence. Only the shifted region (rows 2..H-7, cols 2..W-7,
// 1-indexed) receives data; everything else stays zero.
struct ReconstructedPlane {
    Resolution res;
    std::vector<std::uint8_t> luma;
};
ReconstructedPlane deserialize_frame(const std::vector<DataWord>& words);

}  // namespace vqm

#endif  // VQM_SERIALIZER_HPP
