#ifndef CSZI_ERROR_HPP
#define CSZI_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cszi {

enum class ErrorCode {
    InvalidArgument,
    // grid-io
    SizeMismatch,
    NonFiniteValue,
    IoFailure,
    // predictor
    InvalidStride,
    NoNeighbor,
    Inconsistent,
    // entropy codec
    OutOfRange,
    EmptyHistogram,
    LengthOverflow,
    UnknownSymbol,
    TruncatedStream,
    MalformedSection,
    Corrupt,
    BadMagic,
    VersionUnsupported,
    LengthMismatch,
    UnknownCodec,
    // metrics
    DimsMismatch,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. `index()` carries the flat element
/// index for errors tied to a single value (NonFiniteValue).
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &what, std::optional<std::size_t> index = std::nullopt)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), index_(index) {}

    ErrorCode code() const noexcept { return code_; }
    std::optional<std::size_t> index() const noexcept { return index_; }

   private:
    ErrorCode code_;
    std::optional<std::size_t> index_;
};

}  // namespace cszi

#endif
