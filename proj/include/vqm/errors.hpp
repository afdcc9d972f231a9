#ifndef VQM_ERRORS_HPP
#define VQM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vqm {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Frame dimensions violate the grid constraints (multiple of 8, >= 16,
// representable in the 16-bit header fields).
class ResolutionInvalid : public Error {
public:
    using Error::Error;
};

class FileUnreadable : public Error {
public:
    using Error::Error;
};

// Input ended inside a luma/chroma plane.
class TruncatedFrame : public Error {
public:
    using Error::Error;
};

class HeaderMalformed : public Error {
public:
    using Error::Error;
};

class UnsupportedColorspace : public Error {
public:
    using Error::Error;
};

// Stream header does not match the geometry the consumer was set up for.
class ResolutionMismatch : public Error {
public:
    using Error::Error;
};

// More payload words arrived than the frame geometry allows.
class WordOverrun : public Error {
public:
    using Error::Error;
};

// Finalize requested before all payload words of the frame were consumed.
class FrameIncomplete : public Error {
public:
    using Error::Error;
};

class TooFewBlocks : public Error {
public:
    using Error::Error;
};

}  // namespace vqm

#endif  // VQM_ERRORS_HPP
