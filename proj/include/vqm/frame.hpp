#ifndef VQM_FRAME_HPP
#define VQM_FRAME_HPP

#include <cstdint>
#include <vector>

namespace vqm {

// Block edge length of the coding grid all four metrics are defined on.
inline constexpr std::uint32_t kBlockSize = 8;
// Largest possible luminance sum of one 8x8 block (64 * 255).
inline constexpr std::uint16_t kMaxBlockSum = 16320;

struct Resolution {
    std::uint32_t width = 0;
    std::uint32_t height = 0;

    friend bool operator==(const Resolution&, const Resolution&) = default;
};

// Throws ResolutionInvalid unless both dimensions are multiples of 8,
// at least 16 (the shifted grid needs one whole block) and fit the
// 16-bit header fields.
void validate(Resolution res);
bool resolution_valid(Resolution res) noexcept;

// One video frame's 8-bit luma plane, row major.
struct Frame {
    std::uint64_t index = 0;
    Resolution res;
    std::vector<std::uint8_t> luma;

    std::uint8_t at(std::uint32_t row, std::uint32_t col) const {
        return luma[static_cast<std::size_t>(row) * res.width + col];
    }
    std::uint8_t& at(std::uint32_t row, std::uint32_t col) {
        return luma[static_cast<std::size_t>(row) * res.width + col];
    }
};

// Block counts of the straight and the shifted 8x8 grid.
//
// Shifted block (u,v), u in [1,shifted_rows], v in [1,shifted_cols],
// covers frame rows 8(u-1)+2 .. 8u+1 and cols 8(v-1)+2 .. 8v+1
// (1-indexed): the first row/column is skipped and the last 7 rows and
// columns are never covered.
struct GridGeometry {
    Resolution res;
    std::uint32_t blx = 0;            // horizontal 8x8 blocks (width / 8)
    std::uint32_t bly = 0;            // vertical 8x8 blocks (height / 8)
    std::uint32_t shifted_cols = 0;   // blx - 1
    std::uint32_t shifted_rows = 0;   // bly - 1
    std::uint32_t shifted_blocks = 0; // shifted_cols * shifted_rows
    std::uint32_t microblocks = 0;    // 4 * shifted_blocks

    friend bool operator==(const GridGeometry&, const GridGeometry&) = default;
};

GridGeometry grid_geometry(Resolution res);

}  // namespace vqm

#endif  // VQM_FRAME_HPP
