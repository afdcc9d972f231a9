#include "doctest.h"
#include "vqm/errors.hpp"
#include "vqm/serializer.hpp"
#include "vqm/synthetic.hpp"

using namespace vqm;

namespace {

// f(r, c) = r * width + c mod 256: every pixel spells out its position.
Frame coordinate_frame(Resolution res) {
    Frame f = constant_frame(res, 0);
    for (std::uint32_t r = 0; r < res.height; ++r)
        for (std::uint32_t c = 0; c < res.width; ++c)
            f.at(r, c) = static_cast<std::uint8_t>(r * res.width + c);
    return f;
}

}  // namespace

TEST_SUITE("serializer") {

TEST_CASE("header word carries width and height in the low 32 bits") {
    const DataWord w = header_word({7680, 4320});
    CHECK(w.bytes[0] == 0x00);  // 7680 = 0x1e00
    CHECK(w.bytes[1] == 0x1e);
    CHECK(w.bytes[2] == 0xe0);  // 4320 = 0x10e0
    CHECK(w.bytes[3] == 0x10);
    for (int i = 4; i < 16; ++i) CHECK(w.bytes[i] == 0);

    const Resolution back = header_resolution(w);
    CHECK(back == Resolution{7680, 4320});
}

TEST_CASE("payload words are column-major microblocks in TL,TR,BL,BR order") {
    const Frame f = coordinate_frame({16, 16});
    const std::vector<DataWord> words = serialize_frame(f);
    REQUIRE(words.size() == 5);  // header + 4 microblocks of the single shifted block

    // TL quadrant starts at frame (1,1); column-major means bytes 0..3
    // walk down column 1.
    CHECK(words[1].bytes[0] == f.at(1, 1));
    CHECK(words[1].bytes[1] == f.at(2, 1));
    CHECK(words[1].bytes[2] == f.at(3, 1));
    CHECK(words[1].bytes[3] == f.at(4, 1));
    CHECK(words[1].bytes[4] == f.at(1, 2));
    CHECK(words[1].bytes[15] == f.at(4, 4));

    CHECK(words[2].bytes[0] == f.at(1, 5));  // TR
    CHECK(words[3].bytes[0] == f.at(5, 1));  // BL
    CHECK(words[4].bytes[0] == f.at(5, 5));  // BR
    CHECK(words[4].bytes[15] == f.at(8, 8));
}

TEST_CASE("blocks are emitted in raster order") {
    const Frame f = coordinate_frame({24, 24});
    const std::vector<DataWord> words = serialize_frame(f);
    REQUIRE(words.size() == 1 + 4 * 4);

    // Second shifted block (u=0, v=1) starts at frame (1, 9); its TL word
    // is payload word 5.
    CHECK(words[5].bytes[0] == f.at(1, 9));
    // Third block is the start of the second block row: frame (9, 1).
    CHECK(words[9].bytes[0] == f.at(9, 1));
}

TEST_CASE("word count is 1 + 4 * shifted_blocks for any geometry") {
    for (std::uint64_t i = 0; i < 24; ++i) {
        Resolution res;
        res.width = 16 + 8 * static_cast<std::uint32_t>(mix64(i * 2) % 12);
        res.height = 16 + 8 * static_cast<std::uint32_t>(mix64(i * 2 + 1) % 12);
        const Frame f = random_frame(res, i);
        const GridGeometry g = grid_geometry(res);
        CHECK(serialize_frame(f).size() == 1 + 4 * static_cast<std::size_t>(g.shifted_blocks));
    }
}

TEST_CASE("round trip reconstructs exactly the shifted region") {
    const Resolution res{40, 32};
    const Frame f = random_frame(res, 7);
    const ReconstructedPlane back = deserialize_frame(serialize_frame(f));
    REQUIRE(back.res == res);

    const GridGeometry g = grid_geometry(res);
    const std::uint32_t last_row = 8 * g.shifted_rows;  // rows 1..last_row covered
    const std::uint32_t last_col = 8 * g.shifted_cols;
    for (std::uint32_t r = 0; r < res.height; ++r) {
        for (std::uint32_t c = 0; c < res.width; ++c) {
            const std::uint8_t got = back.luma[r * res.width + c];
            const bool covered = r >= 1 && r <= last_row && c >= 1 && c <= last_col;
            if (covered) {
                CHECK(got == f.at(r, c));
            } else {
                CHECK(got == 0);
            }
        }
    }
}

TEST_CASE("deserialize rejects missing or surplus words") {
    std::vector<DataWord> words = serialize_frame(random_frame({16, 16}, 1));
    words.pop_back();
    CHECK_THROWS_AS(deserialize_frame(words), FrameIncomplete);
    CHECK_THROWS_AS(deserialize_frame({}), HeaderMalformed);
}

}  // TEST_SUITE
