#ifndef VQM_ORACLE_HPP
#define VQM_ORACLE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "vqm/frame.hpp"

namespace vqm {

// Full-precision reference implementations of all four metrics, computed
// directly on frame pixels with no serialization and no fixed-width
// accumulators. Truncation appears only where the metric definition
// itself demands it (the exposure shifts). These are the equivalence
// standard the streaming engine is tested against.

// Per-shifted-block luminance sums and means, raster order plus sorted
// ascending copies.
struct BlockSummary {
    std::vector<std::uint32_t> sums;
    std::vector<double> means;
    std::vector<std::uint32_t> sums_sorted;
    std::vector<double> means_sorted;
};

BlockSummary shifted_block_summary(const Frame& f);

// The twelve row-direction differences of one 4x4 microblock:
// d[0..3] = row1 - row2 per column, d[4..7] = row3 - row2,
// d[8..11] = row3 - row4. A microblock counts as combed when all twelve
// share one strict sign.
struct InterlaceTest {
    std::array<int, 12> d{};

    bool detected() const;
};

InterlaceTest interlace_test(const Frame& f, std::uint32_t top_row, std::uint32_t left_col);

struct BlockinessSums {
    std::uint64_t inter = 0;
    std::uint64_t intra = 0;
    std::optional<double> metric;  // intra / inter; empty when inter == 0
};

// Accumulates the twelve boundary pairs and twelve inside pairs of every
// shifted block in frame coordinates.
BlockinessSums oracle_blockiness(const Frame& f);

// Hardware-variant exposure: four smallest and four largest block sums
// (sentinel-padded when fewer than four blocks exist), each >>2, summed,
// then >>7.
std::uint16_t oracle_exposure_hw(const Frame& f);

// Textbook variant: mean of the three darkest and three brightest block
// means. Throws TooFewBlocks on frames with fewer than three shifted
// blocks.
double oracle_exposure_means(const Frame& f);

// 1 when the spread of block sums is at most th_blout, else 0.
int oracle_blackout(const Frame& f, std::uint32_t th_blout = 4);

struct InterlaceCount {
    std::uint64_t count = 0;
    double metric = 0.0;  // count / (4 * shifted_blocks)
};

InterlaceCount oracle_interlace(const Frame& f);

}  // namespace vqm

#endif  // VQM_ORACLE_HPP
