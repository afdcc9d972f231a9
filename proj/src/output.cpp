#include "vqm/output.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace vqm {

std::string format_double(double v) {
    std::array<char, 32> buf;
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

OutputRow make_output_row(const FrameResult& r) {
    OutputRow row;
    row.frame_index = r.metrics.frame_index;
    row.blockiness = r.metrics.blockiness;
    row.exposure = r.metrics.exposure;
    row.blackout = r.metrics.blackout;
    row.interlace = r.metrics.interlace;
    row.inter_sum = r.record.inter_sum;
    row.intra_sum = r.record.intra_sum;
    return row;
}

std::string analyze_csv_header() {
    return "frame_index,blockiness,exposure,blackout,interlace,inter_sum,intra_sum";
}

std::string analyze_csv_row(const OutputRow& row) {
    std::string out = std::to_string(row.frame_index);
    out += ',';
    if (row.blockiness) out += format_double(*row.blockiness);
    out += ',';
    out += std::to_string(row.exposure);
    out += ',';
    out += row.blackout ? '1' : '0';
    out += ',';
    out += format_double(row.interlace);
    out += ',';
    out += std::to_string(row.inter_sum);
    out += ',';
    out += std::to_string(row.intra_sum);
    return out;
}

std::string analyze_json(const std::vector<OutputRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const OutputRow& row : rows) {
        nlohmann::json j;
        j["frame_index"] = row.frame_index;
        if (row.blockiness) {
            j["blockiness"] = *row.blockiness;
        } else {
            j["blockiness"] = nullptr;
        }
        j["exposure"] = row.exposure;
        j["blackout"] = row.blackout ? 1 : 0;
        j["interlace"] = row.interlace;
        j["inter_sum"] = row.inter_sum;
        j["intra_sum"] = row.intra_sum;
        arr.push_back(std::move(j));
    }
    return arr.dump(2);
}

namespace {

std::string fixed(double v, int precision) {
    std::array<char, 64> buf;
    const int n = std::snprintf(buf.data(), buf.size(), "%.*f", precision, v);
    return std::string(buf.data(), static_cast<std::size_t>(n));
}

std::string scientific(double v, int precision) {
    std::array<char, 64> buf;
    const int n = std::snprintf(buf.data(), buf.size(), "%.*e", precision, v);
    return std::string(buf.data(), static_cast<std::size_t>(n));
}

void pad_to(std::string& line, std::size_t column) {
    if (line.size() < column) line.append(column - line.size(), ' ');
}

}  // namespace

std::string bench_text(const BenchReport& rep) {
    std::ostringstream out;
    static constexpr std::array<std::size_t, 7> kCol = {0, 12, 19, 27, 38, 50, 64};
    const auto emit = [&](const std::array<std::string, 7>& cells) {
        std::string line;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) {
                pad_to(line, kCol[i] - 1);
                line += ' ';
            }
            line += cells[i];
        }
        out << line << '\n';
    };
    emit({"resolution", "lanes", "frames", "seconds", "fps", "bytes/s", "real-time"});
    for (const BenchRow& r : rep.rows) {
        emit({std::to_string(r.res.width) + "x" + std::to_string(r.res.height),
              std::to_string(r.lanes), std::to_string(r.frames), fixed(r.seconds, 3),
              fixed(r.fps, 2), scientific(r.bytes_per_second, 3), r.real_time ? "yes" : "no"});
    }
    out << "reference: 6-lane FPGA pipeline, " << scientific(rep.reference_bytes_per_second, 2)
        << " bytes/s (comparison only)\n";
    return out.str();
}

std::string bench_csv(const BenchReport& rep) {
    std::string out = "kind,width,height,lanes,frames,seconds,fps,bytes_per_second,real_time\n";
    for (const BenchRow& r : rep.rows) {
        out += "measured,";
        out += std::to_string(r.res.width) + ',' + std::to_string(r.res.height) + ',';
        out += std::to_string(r.lanes) + ',' + std::to_string(r.frames) + ',';
        out += format_double(r.seconds) + ',' + format_double(r.fps) + ',';
        out += format_double(r.bytes_per_second) + ',';
        out += r.real_time ? '1' : '0';
        out += '\n';
    }
    out += "reference,,,,,,," + format_double(rep.reference_bytes_per_second) + ",\n";
    return out;
}

std::string bench_json(const BenchReport& rep) {
    nlohmann::json doc;
    doc["reference_bytes_per_second"] = rep.reference_bytes_per_second;
    nlohmann::json rows = nlohmann::json::array();
    for (const BenchRow& r : rep.rows) {
        nlohmann::json j;
        j["width"] = r.res.width;
        j["height"] = r.res.height;
        j["lanes"] = r.lanes;
        j["frames"] = r.frames;
        j["seconds"] = r.seconds;
        j["fps"] = r.fps;
        j["bytes_per_second"] = r.bytes_per_second;
        j["real_time"] = r.real_time;
        rows.push_back(std::move(j));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2);
}

}  // namespace vqm
