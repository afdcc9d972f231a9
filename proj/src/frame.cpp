#include "vqm/frame.hpp"

#include <limits>
#include <string>

#include "vqm/errors.hpp"

namespace vqm {

bool resolution_valid(Resolution res) noexcept {
    if (res.width % kBlockSize != 0 || res.height % kBlockSize != 0) return false;
    if (res.width < 2 * kBlockSize || res.height < 2 * kBlockSize) return false;
    if (res.width > std::numeric_limits<std::uint16_t>::max()) return false;
    if (res.height > std::numeric_limits<std::uint16_t>::max()) return false;
    return true;
}

void validate(Resolution res) {
    if (!resolution_valid(res)) {
        throw ResolutionInvalid("resolution " + std::to_string(res.width) + "x" +
                                std::to_string(res.height) +
                                " is not a multiple of 8 in [16, 65528] per dimension");
    }
}

GridGeometry grid_geometry(Resolution res) {
    validate(res);
    GridGeometry g;
    g.res = res;
    g.blx = res.width / kBlockSize;
    g.bly = res.height / kBlockSize;
    g.shifted_cols = g.blx - 1;
    g.shifted_rows = g.bly - 1;
    g.shifted_blocks = g.shifted_cols * g.shifted_rows;
    g.microblocks = 4 * g.shifted_blocks;
    return g;
}

}  // namespace vqm
