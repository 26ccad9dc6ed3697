#ifndef CSZI_ARCHIVE_HPP
#define CSZI_ARCHIVE_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "cszi/error_bound.hpp"
#include "cszi/grid.hpp"
#include "cszi/spline.hpp"

namespace cszi {

enum class PredictorKind : std::uint8_t { Interp = 0, Lorenzo = 1 };

std::string_view to_string(PredictorKind p) noexcept;

inline constexpr std::array<char, 4> kArchiveMagic{'C', 'S', 'Z', 'I'};
inline constexpr std::uint16_t kArchiveVersion = 1;
inline constexpr std::size_t kArchiveHeaderSize = 136;

/*
 * Header layout (little-endian, 136 bytes):
 *   0  char[4]  magic "CSZI"
 *   4  u16      version
 *   6  u8       predictor id
 *   7  u8       flags (bit 0: pass-2)
 *   8  u8       pass-2 codec id
 *   9  u8       rank
 *  10  u8       eb mode (0 abs, 1 rel)
 *  11  u8       reserved
 *  12  u64[3]   extents, slowest first, unused = 0
 *  36  f64      eb value as given
 *  44  f64      resolved absolute eb
 *  52  f64      alpha
 *  60  u8[3]    cubic variant per dimension
 *  63  u8[3]    dimension order
 *  66  u16      reserved
 *  68  u32      anchor stride (0 for Lorenzo)
 *  72  u32[3]   super-chunk extents
 *  84  u32      quantization radius
 *  88  u64[4]   section lengths: anchors, codebook, code stream, outliers
 * 120  u64      code stream bit count
 * 128  u64      stored payload length (after pass-2 when enabled)
 */
struct ArchiveHeader {
    PredictorKind predictor = PredictorKind::Interp;
    bool pass2 = false;
    std::uint8_t pass2_codec = 0;
    Dims dims;
    ErrorBound eb;
    double eb_abs = 0;
    double alpha = 1;
    std::array<CubicVariant, kMaxRank> cubic_variant{};
    std::array<std::uint8_t, kMaxRank> dim_order{};
    std::uint32_t anchor_stride = 0;
    std::array<std::uint32_t, kMaxRank> super_chunk{};
    std::uint32_t quant_radius = 0;
    std::uint64_t code_bit_count = 0;

    bool operator==(const ArchiveHeader &) const = default;
};

struct Archive {
    ArchiveHeader header;
    std::vector<std::uint8_t> anchors;  // f32 values in lattice order
    std::vector<std::uint8_t> codebook;  // one code length per symbol
    std::vector<std::uint8_t> code_stream;
    std::vector<std::uint8_t> outliers;

    bool operator==(const Archive &) const = default;
};

std::vector<std::uint8_t> serialize_archive(const Archive &archive);

/// Validates magic, version and every section length.
Archive parse_archive(std::span<const std::uint8_t> bytes);

}  // namespace cszi

#endif
