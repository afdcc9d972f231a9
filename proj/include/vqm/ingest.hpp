#ifndef VQM_INGEST_HPP
#define VQM_INGEST_HPP

#include <filesystem>
#include <memory>
#include <optional>

#include "vqm/frame.hpp"

namespace vqm {

// Sequential, single-consumer frame iterator. next() returns frames with
// indices 0, 1, ... and an empty optional at the exact end of data;
// a partial plane at the end raises TruncatedFrame.
class FrameSource {
public:
    virtual ~FrameSource() = default;
    virtual std::optional<Frame> next() = 0;
    virtual Resolution resolution() const = 0;
};

// Headerless concatenated row-major 8-bit luma planes.
std::unique_ptr<FrameSource> open_raw_source(const std::filesystem::path& path, Resolution res);

// YUV4MPEG2 container; the luma plane is kept, chroma planes are skipped
// byte-exactly. Only 8-bit planar colorspaces are accepted.
std::unique_ptr<FrameSource> open_y4m_source(const std::filesystem::path& path);

}  // namespace vqm

#endif  // VQM_INGEST_HPP
