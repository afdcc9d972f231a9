#include "vqm/oracle.hpp"

#include <algorithm>
#include <string>

#include "vqm/errors.hpp"

namespace vqm {

namespace {

// Local rows/cols (0-based) at which the boundary pairs are sampled.
// Six per direction: four from the boundary-bearing microblock and two
// from the corner microblock.
constexpr std::uint32_t kSampleLines[6] = {0, 1, 2, 3, 4, 7};

inline std::uint64_t absdiff(std::uint8_t a, std::uint8_t b) {
    return a > b ? static_cast<std::uint64_t>(a - b) : static_cast<std::uint64_t>(b - a);
}

}  // namespace

BlockSummary shifted_block_summary(const Frame& f) {
    const GridGeometry g = grid_geometry(f.res);
    BlockSummary s;
    s.sums.reserve(g.shifted_blocks);
    for (std::uint32_t u = 0; u < g.shifted_rows; ++u) {
        const std::uint32_t r0 = 8 * u + 1;
        for (std::uint32_t v = 0; v < g.shifted_cols; ++v) {
            const std::uint32_t c0 = 8 * v + 1;
            std::uint32_t sum = 0;
            for (std::uint32_t r = 0; r < 8; ++r) {
                for (std::uint32_t c = 0; c < 8; ++c) {
                    sum += f.at(r0 + r, c0 + c);
                }
            }
            s.sums.push_back(sum);
        }
    }
    s.means.reserve(s.sums.size());
    for (std::uint32_t sum : s.sums) s.means.push_back(sum / 64.0);
    s.sums_sorted = s.sums;
    std::sort(s.sums_sorted.begin(), s.sums_sorted.end());
    s.means_sorted = s.means;
    std::sort(s.means_sorted.begin(), s.means_sorted.end());
    return s;
}

BlockinessSums oracle_blockiness(const Frame& f) {
    const GridGeometry g = grid_geometry(f.res);
    BlockinessSums out;
    for (std::uint32_t u = 0; u < g.shifted_rows; ++u) {
        const std::uint32_t r0 = 8 * u + 1;
        for (std::uint32_t v = 0; v < g.shifted_cols; ++v) {
            const std::uint32_t c0 = 8 * v + 1;
            for (std::uint32_t l : kSampleLines) {
                // Vertical coding-block boundary between local cols 6|7.
                out.inter += absdiff(f.at(r0 + l, c0 + 6), f.at(r0 + l, c0 + 7));
                out.intra += absdiff(f.at(r0 + l, c0 + 5), f.at(r0 + l, c0 + 6));
                // Horizontal boundary between local rows 6|7.
                out.inter += absdiff(f.at(r0 + 6, c0 + l), f.at(r0 + 7, c0 + l));
                out.intra += absdiff(f.at(r0 + 5, c0 + l), f.at(r0 + 6, c0 + l));
            }
        }
    }
    if (out.inter != 0) {
        out.metric = static_cast<double>(out.intra) / static_cast<double>(out.inter);
    }
    return out;
}

std::uint16_t oracle_exposure_hw(const Frame& f) {
    const BlockSummary s = shifted_block_summary(f);
    const std::size_t n = s.sums_sorted.size();
    std::uint32_t acc = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        const std::uint32_t lo = i < n ? s.sums_sorted[i] : 16384u;
        const std::uint32_t hi = i < n ? s.sums_sorted[n - 1 - i] : 0u;
        acc += lo >> 2;
        acc += hi >> 2;
    }
    return static_cast<std::uint16_t>(acc >> 7);
}

double oracle_exposure_means(const Frame& f) {
    const BlockSummary s = shifted_block_summary(f);
    const std::size_t n = s.means_sorted.size();
    if (n < 3) {
        throw TooFewBlocks("exposure needs at least 3 shifted blocks, frame has " +
                           std::to_string(n));
    }
    double dark = 0.0, bright = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        dark += s.means_sorted[i];
        bright += s.means_sorted[n - 1 - i];
    }
    return (bright + dark) / 2.0;
}

int oracle_blackout(const Frame& f, std::uint32_t th_blout) {
    const BlockSummary s = shifted_block_summary(f);
    const std::uint32_t spread = s.sums_sorted.back() - s.sums_sorted.front();
    return spread <= th_blout ? 1 : 0;
}

bool InterlaceTest::detected() const {
    const bool all_pos = std::all_of(d.begin(), d.end(), [](int v) { return v > 0; });
    const bool all_neg = std::all_of(d.begin(), d.end(), [](int v) { return v < 0; });
    return all_pos || all_neg;
}

InterlaceTest interlace_test(const Frame& f, std::uint32_t top_row, std::uint32_t left_col) {
    InterlaceTest t;
    for (std::uint32_t c = 0; c < 4; ++c) {
        const int row1 = f.at(top_row + 0, left_col + c);
        const int row2 = f.at(top_row + 1, left_col + c);
        const int row3 = f.at(top_row + 2, left_col + c);
        const int row4 = f.at(top_row + 3, left_col + c);
        t.d[c] = row1 - row2;
        t.d[4 + c] = row3 - row2;
        t.d[8 + c] = row3 - row4;
    }
    return t;
}

InterlaceCount oracle_interlace(const Frame& f) {
    const GridGeometry g = grid_geometry(f.res);
    InterlaceCount out;
    for (std::uint32_t u = 0; u < g.shifted_rows; ++u) {
        const std::uint32_t r0 = 8 * u + 1;
        for (std::uint32_t v = 0; v < g.shifted_cols; ++v) {
            const std::uint32_t c0 = 8 * v + 1;
            for (std::uint32_t dr = 0; dr < 8; dr += 4) {
                for (std::uint32_t dc = 0; dc < 8; dc += 4) {
                    if (interlace_test(f, r0 + dr, c0 + dc).detected()) {
                        out.count += 1;
                    }
                }
            }
        }
    }
    out.metric = static_cast<double>(out.count) / (4.0 * static_cast<double>(g.shifted_blocks));
    return out;
}

}  // namespace vqm
