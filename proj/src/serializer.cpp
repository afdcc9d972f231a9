#include "vqm/serializer.hpp"

#include <cstddef>
#include <string>

#include "vqm/errors.hpp"

namespace vqm {

DataWord pack_microblock(const MicroblockPixels& px) {
    DataWord w;
    w.bytes = px.p;
    return w;
}

MicroblockPixels unpack_word(const DataWord& w) {
    MicroblockPixels px;
    px.p = w.bytes;
    return px;
}

DataWord header_word(Resolution res) {
    DataWord w;
    w.bytes[0] = static_cast<std::uint8_t>(res.width & 0xff);
    w.bytes[1] = static_cast<std::uint8_t>((res.width >> 8) & 0xff);
    w.bytes[2] = static_cast<std::uint8_t>(res.height & 0xff);
    w.bytes[3] = static_cast<std::uint8_t>((res.height >> 8) & 0xff);
    return w;
}

Resolution header_resolution(const DataWord& w) {
    Resolution res;
    res.width = static_cast<std::uint32_t>(w.bytes[0]) | (static_cast<std::uint32_t>(w.bytes[1]) << 8);
    res.height = static_cast<std::uint32_t>(w.bytes[2]) | (static_cast<std::uint32_t>(w.bytes[3]) << 8);
    return res;
}

namespace {

// Microblock quadrants of a shifted block, in emission order TL, TR, BL, BR.
constexpr std::uint32_t kQuadrantRow[4] = {0, 0, 4, 4};
constexpr std::uint32_t kQuadrantCol[4] = {0, 4, 0, 4};

}  // namespace

void serialize_frame(const Frame& f, std::vector<DataWord>& out) {
    const GridGeometry g = grid_geometry(f.res);
    if (f.luma.size() != static_cast<std::size_t>(f.res.width) * f.res.height) {
        throw ResolutionMismatch("frame " + std::to_string(f.index) + ": luma plane has " +
                                 std::to_string(f.luma.size()) + " bytes, resolution wants " +
                                 std::to_string(static_cast<std::size_t>(f.res.width) * f.res.height));
    }

    out.clear();
    out.reserve(1 + g.microblocks);
    out.push_back(header_word(f.res));

    const std::uint8_t* plane = f.luma.data();
    const std::size_t stride = f.res.width;
    for (std::uint32_t u = 0; u < g.shifted_rows; ++u) {
        const std::uint32_t block_row = 8 * u + 1;
        for (std::uint32_t v = 0; v < g.shifted_cols; ++v) {
            const std::uint32_t block_col = 8 * v + 1;
            for (int q = 0; q < 4; ++q) {
                const std::uint8_t* top_left =
                    plane + static_cast<std::size_t>(block_row + kQuadrantRow[q]) * stride +
                    block_col + kQuadrantCol[q];
                DataWord w;
                std::uint8_t* b = w.bytes.data();
                for (std::uint32_t col = 0; col < 4; ++col) {
                    const std::uint8_t* src = top_left + col;
                    b[4 * col + 0] = src[0];
                    b[4 * col + 1] = src[stride];
                    b[4 * col + 2] = src[2 * stride];
                    b[4 * col + 3] = src[3 * stride];
                }
                out.push_back(w);
            }
        }
    }
}

std::vector<DataWord> serialize_frame(const Frame& f) {
    std::vector<DataWord> out;
    serialize_frame(f, out);
    return out;
}

ReconstructedPlane deserialize_frame(const std::vector<DataWord>& words) {
    if (words.empty()) {
        throw HeaderMalformed("word sequence is empty, expected a resolution header");
    }
    const Resolution res = header_resolution(words.front());
    const GridGeometry g = grid_geometry(res);
    if (words.size() != 1 + static_cast<std::size_t>(g.microblocks)) {
        throw FrameIncomplete("expected " + std::to_string(1 + g.microblocks) + " words for " +
                              std::to_string(res.width) + "x" + std::to_string(res.height) +
                              ", got " + std::to_string(words.size()));
    }

    ReconstructedPlane out;
    out.res = res;
    out.luma.assign(static_cast<std::size_t>(res.width) * res.height, 0);

    const std::size_t stride = res.width;
    std::size_t word = 1;
    for (std::uint32_t u = 0; u < g.shifted_rows; ++u) {
        const std::uint32_t block_row = 8 * u + 1;
        for (std::uint32_t v = 0; v < g.shifted_cols; ++v) {
            const std::uint32_t block_col = 8 * v + 1;
            for (int q = 0; q < 4; ++q, ++word) {
                const MicroblockPixels px = unpack_word(words[word]);
                std::uint8_t* top_left =
                    out.luma.data() + static_cast<std::size_t>(block_row + kQuadrantRow[q]) * stride +
                    block_col + kQuadrantCol[q];
                for (std::uint32_t col = 0; col < 4; ++col) {
                    std::uint8_t* dst = top_left + col;
                    dst[0] = px.p[4 * col + 0];
                    dst[stride] = px.p[4 * col + 1];
                    dst[2 * stride] = px.p[4 * col + 2];
                    dst[3 * stride] = px.p[4 * col + 3];
                }
            }
        }
    }
    return out;
}

}  // namespace vqm
