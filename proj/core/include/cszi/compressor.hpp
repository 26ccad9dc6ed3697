#ifndef CSZI_COMPRESSOR_HPP
#define CSZI_COMPRESSOR_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cszi/archive.hpp"
#include "cszi/error_bound.hpp"
#include "cszi/grid.hpp"
#include "cszi/interp_predictor.hpp"
#include "cszi/parallel.hpp"

namespace cszi {

struct CompressOptions {
    ErrorBound eb;
    PredictorKind predictor = PredictorKind::Interp;
    bool pass2 = true;
    std::uint8_t pass2_codec = 0;
    std::int32_t quant_radius = kDefaultQuantRadius;

    // Auto-tuned unless pinned.
    std::optional<double> alpha;
    std::optional<std::vector<CubicVariant>> cubic_variants;
    std::optional<std::vector<std::uint8_t>> dim_order;
    std::optional<ChunkLayout> layout;

    Exec exec;
};

struct CompressResult {
    std::vector<std::uint8_t> bytes;
    ArchiveHeader header;
    std::size_t nonzero_codes = 0;
    std::size_t outlier_count = 0;
    double predict_seconds = 0;  // profiling + prediction + quantization
    double encode_seconds = 0;   // histogram, Huffman, sections, pass-2
};

CompressResult compress(const Grid &grid, const CompressOptions &options);

/// Everything needed to rebuild the grid is read from the archive header.
Grid decompress(std::span<const std::uint8_t> archive, const Exec &exec = {});

/// Predictor config recorded in an interpolation archive header.
PredictorConfig config_from_header(const ArchiveHeader &header);

}  // namespace cszi

#endif
