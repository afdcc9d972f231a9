#include "vqm/synthetic.hpp"

#include <cstring>

namespace vqm {

// splitmix64: fast enough that frame generation never dominates a
// benchmark point, and stateless per (seed, index).
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

namespace {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }

    std::uint8_t byte() { return static_cast<std::uint8_t>(next()); }

    // Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

void fill_random(std::vector<std::uint8_t>& plane, std::uint64_t seed) {
    std::size_t i = 0;
    std::uint64_t ctr = seed;
    for (; i + 8 <= plane.size(); i += 8) {
        const std::uint64_t v = mix64(ctr++);
        std::memcpy(plane.data() + i, &v, 8);
    }
    if (i < plane.size()) {
        const std::uint64_t v = mix64(ctr);
        std::memcpy(plane.data() + i, &v, plane.size() - i);
    }
}

Frame blank(Resolution res, std::uint64_t index) {
    validate(res);
    Frame f;
    f.index = index;
    f.res = res;
    f.luma.assign(static_cast<std::size_t>(res.width) * res.height, 0);
    return f;
}

}  // namespace

Frame constant_frame(Resolution res, std::uint8_t value, std::uint64_t index) {
    Frame f = blank(res, index);
    std::memset(f.luma.data(), value, f.luma.size());
    return f;
}

Frame comb_frame(Resolution res, std::uint8_t odd_value, std::uint8_t even_value,
                 std::uint64_t index) {
    Frame f = blank(res, index);
    for (std::uint32_t r = 0; r < res.height; ++r) {
        std::memset(f.luma.data() + static_cast<std::size_t>(r) * res.width,
                    r % 2 == 0 ? odd_value : even_value, res.width);
    }
    return f;
}

Frame random_frame(Resolution res, std::uint64_t seed, std::uint64_t index) {
    Frame f = blank(res, index);
    fill_random(f.luma, mix64(seed) ^ mix64(index + 1));
    return f;
}

Frame patterned_frame(Resolution res, std::uint64_t seed, std::uint64_t index) {
    Frame f = blank(res, index);
    Rng rng(mix64(seed ^ 0x5eedf00d) ^ mix64(index));
    switch (index % 6) {
        case 0: {  // uniform noise
            fill_random(f.luma, rng.next());
            break;
        }
        case 1: {  // near-constant: spread hovers around the blackout threshold
            const std::uint8_t base = static_cast<std::uint8_t>(rng.below(248));
            const std::uint8_t span = static_cast<std::uint8_t>(1 + rng.below(7));
            for (auto& px : f.luma) px = static_cast<std::uint8_t>(base + rng.below(span));
            break;
        }
        case 2: {  // comb with sparse dropouts that break the pattern locally
            const std::uint8_t hi = static_cast<std::uint8_t>(128 + rng.below(128));
            const std::uint8_t lo = static_cast<std::uint8_t>(rng.below(96));
            for (std::uint32_t r = 0; r < res.height; ++r) {
                std::memset(f.luma.data() + static_cast<std::size_t>(r) * res.width,
                            r % 2 == 0 ? hi : lo, res.width);
            }
            const std::uint64_t dropouts = rng.below(8);
            for (std::uint64_t i = 0; i < dropouts; ++i) {
                const std::uint32_t col = static_cast<std::uint32_t>(rng.below(res.width));
                for (std::uint32_t r = 0; r < res.height; ++r) f.at(r, col) = hi;
            }
            break;
        }
        case 3: {  // piecewise-constant 8x8 blocks: strong boundary jumps
            for (std::uint32_t br = 0; br < res.height / 8; ++br) {
                for (std::uint32_t bc = 0; bc < res.width / 8; ++bc) {
                    const std::uint8_t v = rng.byte();
                    for (std::uint32_t r = 0; r < 8; ++r) {
                        std::memset(f.luma.data() +
                                        static_cast<std::size_t>(8 * br + r) * res.width + 8 * bc,
                                    v, 8);
                    }
                }
            }
            break;
        }
        case 4: {  // horizontal gradient with noise
            for (std::uint32_t r = 0; r < res.height; ++r) {
                for (std::uint32_t c = 0; c < res.width; ++c) {
                    f.at(r, c) = static_cast<std::uint8_t>((c * 255) / res.width + rng.below(3));
                }
            }
            break;
        }
        case 5: {  // exactly constant
            std::memset(f.luma.data(), static_cast<std::uint8_t>(rng.below(256)), f.luma.size());
            break;
        }
    }
    return f;
}

SyntheticSource::SyntheticSource(Resolution res, std::uint64_t frames, std::uint64_t seed,
                                 SyntheticKind kind)
    : res_(res), frames_(frames), seed_(seed), kind_(kind) {
    validate(res);
}

std::optional<Frame> SyntheticSource::next() {
    if (next_index_ >= frames_) {
        return std::nullopt;
    }
    const std::uint64_t idx = next_index_++;
    return kind_ == SyntheticKind::Random ? random_frame(res_, seed_, idx)
                                          : patterned_frame(res_, seed_, idx);
}

}  // namespace vqm
