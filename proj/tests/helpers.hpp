#ifndef VQM_TESTS_HELPERS_HPP
#define VQM_TESTS_HELPERS_HPP

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "vqm/frame.hpp"
#include "vqm/ingest.hpp"

namespace testutil {

// Unique scratch directory, removed on destruction.
class TempDir {
public:
    TempDir() {
        static int counter = 0;
        const auto base = std::filesystem::temp_directory_path();
        for (int i = 0; i < 10000; ++i) {
            auto candidate = base / ("vqm-test-" + std::to_string(::getpid()) + "-" +
                                     std::to_string(counter++));
            std::error_code ec;
            if (std::filesystem::create_directory(candidate, ec)) {
                path_ = candidate;
                return;
            }
        }
        throw std::runtime_error("cannot create temp directory");
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path file(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

inline void write_file(const std::filesystem::path& p, const std::string& bytes) {
    std::ofstream out(p, std::ios::binary);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("cannot write " + p.string());
}

inline std::string luma_bytes(const vqm::Frame& f) {
    return std::string(reinterpret_cast<const char*>(f.luma.data()), f.luma.size());
}

inline std::size_t y4m_chroma_bytes(vqm::Resolution res, const std::string& colorspace) {
    const std::size_t w = res.width, h = res.height;
    if (colorspace.rfind("420", 0) == 0) return 2 * (w / 2) * (h / 2);
    if (colorspace == "422") return 2 * (w / 2) * h;
    if (colorspace == "444") return 2 * w * h;
    return 0;  // mono
}

// Y4M container around the given lumas; chroma planes filled with 0x80.
inline std::string make_y4m(const std::vector<vqm::Frame>& frames,
                            const std::string& colorspace = "420",
                            const std::string& frame_params = "") {
    if (frames.empty()) throw std::runtime_error("make_y4m needs at least one frame");
    const vqm::Resolution res = frames.front().res;
    std::string out = "YUV4MPEG2 W" + std::to_string(res.width) + " H" +
                      std::to_string(res.height) + " F25:1 Ip A1:1 C" + colorspace + "\n";
    for (const vqm::Frame& f : frames) {
        out += "FRAME" + frame_params + "\n";
        out += luma_bytes(f);
        out.append(y4m_chroma_bytes(res, colorspace), '\x80');
    }
    return out;
}

struct CmdResult {
    int exit_code = -1;
    std::string out;
};

// Runs a shell command, captures its stdout.
inline CmdResult run_cmd(const std::string& cmd) {
    CmdResult res;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return res;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof(buf), pipe)) > 0) {
        res.out.append(buf, n);
    }
    const int rc = ::pclose(pipe);
    res.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return res;
}

// In-memory source over a fixed frame list.
class VectorSource final : public vqm::FrameSource {
public:
    explicit VectorSource(std::vector<vqm::Frame> frames) : frames_(std::move(frames)) {}

    vqm::Resolution resolution() const override {
        return frames_.empty() ? vqm::Resolution{16, 16} : frames_.front().res;
    }
    std::optional<vqm::Frame> next() override {
        if (next_ >= frames_.size()) return std::nullopt;
        return frames_[next_++];
    }

private:
    std::vector<vqm::Frame> frames_;
    std::size_t next_ = 0;
};

// Yields the given frames, then throws the given callable's exception.
template <typename Thrower>
class FailingSource final : public vqm::FrameSource {
public:
    FailingSource(std::vector<vqm::Frame> frames, Thrower thrower)
        : frames_(std::move(frames)), thrower_(std::move(thrower)) {}

    vqm::Resolution resolution() const override {
        return frames_.empty() ? vqm::Resolution{16, 16} : frames_.front().res;
    }
    std::optional<vqm::Frame> next() override {
        if (next_ >= frames_.size()) thrower_();
        return frames_[next_++];
    }

private:
    std::vector<vqm::Frame> frames_;
    Thrower thrower_;
    std::size_t next_ = 0;
};

}  // namespace testutil

#endif  // VQM_TESTS_HELPERS_HPP
