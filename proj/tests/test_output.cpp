#include <cstdlib>

#include "doctest.h"
#include "json.hpp"
#include "vqm/output.hpp"

using namespace vqm;

namespace {

OutputRow comb_row() {
    OutputRow row;
    row.frame_index = 0;
    row.blockiness = 1.0;
    row.exposure = 75;
    row.blackout = true;
    row.interlace = 1.0;
    row.inter_sum = 2700;
    row.intra_sum = 2700;
    return row;
}

OutputRow constant_row() {
    OutputRow row;
    row.frame_index = 7;
    row.exposure = 100;
    row.blackout = true;
    return row;
}

}  // namespace

TEST_SUITE("output") {

TEST_CASE("format_double is shortest-round-trip") {
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(2.19e9) == "2.19e+09");
    for (int k = 0; k <= 36; ++k) {
        const double v = k / 36.0;
        CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
    }
}

TEST_CASE("csv rows follow the fixed column order") {
    CHECK(analyze_csv_header() ==
          "frame_index,blockiness,exposure,blackout,interlace,inter_sum,intra_sum");
    CHECK(analyze_csv_row(comb_row()) == "0,1,75,1,1,2700,2700");
    // Undefined blockiness is an empty cell.
    CHECK(analyze_csv_row(constant_row()) == "7,,100,1,0,0,0");
}

TEST_CASE("json rows mirror the csv values exactly") {
    const auto doc = nlohmann::json::parse(analyze_json({comb_row(), constant_row()}));
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 2);

    CHECK(doc[0]["frame_index"] == 0);
    CHECK(doc[0]["blockiness"].get<double>() == 1.0);
    CHECK(doc[0]["blackout"] == 1);  // strictly 0/1, not true/false
    CHECK(doc[0]["interlace"].get<double>() == 1.0);
    CHECK(doc[0]["inter_sum"] == 2700);

    CHECK(doc[1]["blockiness"].is_null());
    CHECK(doc[1]["blackout"] == 1);
    CHECK(doc[1]["exposure"] == 100);

    // The identical-values invariant: parse the csv cell back and compare
    // with the json number bit for bit.
    const std::string csv = analyze_csv_row(comb_row());
    const std::string cell = csv.substr(csv.find(',') + 1);  // blockiness field
    CHECK(std::strtod(cell.c_str(), nullptr) == doc[0]["blockiness"].get<double>());
}

TEST_CASE("bench renderings carry the reference context row") {
    BenchReport rep;
    BenchRow row;
    row.res = {1920, 1080};
    row.lanes = 6;
    row.frames = 100;
    row.seconds = 2.0;
    row.fps = 50.0;
    row.bytes_per_second = 50.0 * 1920 * 1080;
    row.real_time = true;
    rep.rows.push_back(row);

    const std::string text = bench_text(rep);
    CHECK(text.find("1920x1080") != std::string::npos);
    CHECK(text.find("reference") != std::string::npos);

    const std::string csv = bench_csv(rep);
    CHECK(csv.find("measured,1920,1080,6,100,2,50,") != std::string::npos);
    CHECK(csv.find("reference,,,,,,,") != std::string::npos);

    const auto doc = nlohmann::json::parse(bench_json(rep));
    CHECK(doc["reference_bytes_per_second"].get<double>() == kReferenceBytesPerSecond);
    REQUIRE(doc["rows"].size() == 1);
    CHECK(doc["rows"][0]["fps"].get<double>() == 50.0);
    CHECK(doc["rows"][0]["real_time"] == true);
}

}  // TEST_SUITE
