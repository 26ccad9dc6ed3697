#include "cszi/error.hpp"

namespace cszi {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::SizeMismatch: return "SizeMismatch";
        case ErrorCode::NonFiniteValue: return "NonFiniteValue";
        case ErrorCode::IoFailure: return "IoFailure";
        case ErrorCode::InvalidStride: return "InvalidStride";
        case ErrorCode::NoNeighbor: return "NoNeighbor";
        case ErrorCode::Inconsistent: return "Inconsistent";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::EmptyHistogram: return "EmptyHistogram";
        case ErrorCode::LengthOverflow: return "LengthOverflow";
        case ErrorCode::UnknownSymbol: return "UnknownSymbol";
        case ErrorCode::TruncatedStream: return "TruncatedStream";
        case ErrorCode::MalformedSection: return "MalformedSection";
        case ErrorCode::Corrupt: return "Corrupt";
        case ErrorCode::BadMagic: return "BadMagic";
        case ErrorCode::VersionUnsupported: return "VersionUnsupported";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::UnknownCodec: return "UnknownCodec";
        case ErrorCode::DimsMismatch: return "DimsMismatch";
    }
    return "Unknown";
}

}  // namespace cszi
