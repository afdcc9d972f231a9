#include "vqm/ingest.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "vqm/errors.hpp"

namespace vqm {

namespace {

class RawFileSource final : public FrameSource {
public:
    RawFileSource(const std::filesystem::path& path, Resolution res)
        : res_(res), stream_(path, std::ios::binary) {
        validate(res);
        if (!stream_) {
            throw FileUnreadable("cannot open " + path.string());
        }
    }

    Resolution resolution() const override { return res_; }

    std::optional<Frame> next() override {
        const std::size_t plane = static_cast<std::size_t>(res_.width) * res_.height;
        Frame f;
        f.index = next_index_;
        f.res = res_;
        f.luma.resize(plane);
        stream_.read(reinterpret_cast<char*>(f.luma.data()), static_cast<std::streamsize>(plane));
        const std::size_t got = static_cast<std::size_t>(stream_.gcount());
        if (got == 0 && stream_.eof()) {
            return std::nullopt;
        }
        if (got != plane) {
            throw TruncatedFrame("frame " + std::to_string(next_index_) + ": got " +
                                 std::to_string(got) + " of " + std::to_string(plane) +
                                 " luma bytes");
        }
        ++next_index_;
        return f;
    }

private:
    Resolution res_;
    std::ifstream stream_;
    std::uint64_t next_index_ = 0;
};

class Y4mFileSource final : public FrameSource {
public:
    explicit Y4mFileSource(const std::filesystem::path& path) : stream_(path, std::ios::binary) {
        if (!stream_) {
            throw FileUnreadable("cannot open " + path.string());
        }
        parse_stream_header();
        validate(res_);
    }

    Resolution resolution() const override { return res_; }

    std::optional<Frame> next() override {
        std::string marker;
        if (!read_line(marker)) {
            return std::nullopt;  // clean end exactly before a frame marker
        }
        if (marker.rfind("FRAME", 0) != 0) {
            throw HeaderMalformed("expected FRAME marker before frame " +
                                  std::to_string(next_index_));
        }

        const std::size_t plane = static_cast<std::size_t>(res_.width) * res_.height;
        Frame f;
        f.index = next_index_;
        f.res = res_;
        f.luma.resize(plane);
        stream_.read(reinterpret_cast<char*>(f.luma.data()), static_cast<std::streamsize>(plane));
        if (static_cast<std::size_t>(stream_.gcount()) != plane) {
            throw TruncatedFrame("frame " + std::to_string(next_index_) + ": luma plane truncated");
        }
        if (chroma_bytes_ > 0) {
            stream_.ignore(static_cast<std::streamsize>(chroma_bytes_));
            if (static_cast<std::size_t>(stream_.gcount()) != chroma_bytes_) {
                throw TruncatedFrame("frame " + std::to_string(next_index_) +
                                     ": chroma planes truncated");
            }
        }
        ++next_index_;
        return f;
    }

private:
    bool read_line(std::string& out) {
        out.clear();
        int ch;
        while ((ch = stream_.get()) != std::ifstream::traits_type::eof()) {
            if (ch == '\n') return true;
            out.push_back(static_cast<char>(ch));
            if (out.size() > 512) {
                throw HeaderMalformed("header line longer than 512 bytes");
            }
        }
        return !out.empty();  // trailing bytes without newline are malformed below
    }

    void parse_stream_header() {
        std::string line;
        if (!read_line(line) || line.rfind("YUV4MPEG2", 0) != 0) {
            throw HeaderMalformed("missing YUV4MPEG2 signature");
        }
        std::string colorspace = "420";
        bool have_w = false, have_h = false;
        std::istringstream tags(line.substr(9));
        std::string tag;
        while (tags >> tag) {
            switch (tag[0]) {
                case 'W':
                    res_.width = parse_dim(tag.substr(1));
                    have_w = true;
                    break;
                case 'H':
                    res_.height = parse_dim(tag.substr(1));
                    have_h = true;
                    break;
                case 'C':
                    colorspace = tag.substr(1);
                    break;
                default:
                    break;  // frame rate, interlacing and aspect tags are irrelevant here
            }
        }
        if (!have_w || !have_h) {
            throw HeaderMalformed("stream header lacks W or H tag");
        }
        chroma_bytes_ = chroma_plane_bytes(colorspace);
    }

    std::uint32_t parse_dim(const std::string& text) {
        if (text.empty() || text.size() > 6 ||
            text.find_first_not_of("0123456789") != std::string::npos) {
            throw HeaderMalformed("bad dimension '" + text + "'");
        }
        return static_cast<std::uint32_t>(std::stoul(text));
    }

    std::size_t chroma_plane_bytes(const std::string& cs) const {
        const std::size_t w = res_.width, h = res_.height;
        if (cs == "420" || cs == "420jpeg" || cs == "420mpeg2" || cs == "420paldv") {
            return 2 * (w / 2) * (h / 2);
        }
        if (cs == "422") {
            return 2 * (w / 2) * h;
        }
        if (cs == "444") {
            return 2 * w * h;
        }
        if (cs == "mono") {
            return 0;
        }
        throw UnsupportedColorspace("colorspace C" + cs + " is not 8-bit planar");
    }

    std::ifstream stream_;
    Resolution res_;
    std::size_t chroma_bytes_ = 0;
    std::uint64_t next_index_ = 0;
};

}  // namespace

std::unique_ptr<FrameSource> open_raw_source(const std::filesystem::path& path, Resolution res) {
    return std::make_unique<RawFileSource>(path, res);
}

std::unique_ptr<FrameSource> open_y4m_source(const std::filesystem::path& path) {
    return std::make_unique<Y4mFileSource>(path);
}

}  // namespace vqm
