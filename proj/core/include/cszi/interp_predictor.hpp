#ifndef CSZI_INTERP_PREDICTOR_HPP
#define CSZI_INTERP_PREDICTOR_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "cszi/grid.hpp"
#include "cszi/layout.hpp"
#include "cszi/parallel.hpp"
#include "cszi/spline.hpp"

namespace cszi {

constexpr std::int32_t kDefaultQuantRadius = 512;

/// Everything the decompressor must know to replay the prediction.
struct PredictorConfig {
    ChunkLayout layout;
    double alpha = 1.0;
    std::array<CubicVariant, kMaxRank> cubic_variant{};  // per dimension, slowest first
    std::array<std::uint8_t, kMaxRank> dim_order{0, 1, 2};  // first `rank` entries used
    std::int32_t quant_radius = kDefaultQuantRadius;
    double eb_abs = 0.0;

    void validate(const Dims &dims) const;

    /// Defaults for `dims`: NotAKnot everywhere, natural dimension order, alpha 1.
    static PredictorConfig defaults_for(const Dims &dims, double eb_abs);

    bool operator==(const PredictorConfig &) const = default;
};

struct QuantizedField {
    std::vector<std::int32_t> codes;     // one per grid element; 0 at anchors and outliers
    std::vector<IndexedValue> outliers;  // strictly increasing indices
    std::vector<IndexedValue> anchors;   // lattice order, empty for Lorenzo

    std::size_t nonzero_codes() const noexcept;
    bool operator==(const QuantizedField &) const = default;
};

/// Compress direction: quantizer runs against `original`, outliers are flagged in `outlier_mask`.
struct CompressPass {
    std::span<const float> original;
    std::span<std::int32_t> codes;
    std::span<std::uint8_t> outlier_mask;
};

/// Decompress direction: outlier positions already hold their stored values in the buffer.
struct DecompressPass {
    std::span<const std::int32_t> codes;
    std::span<const std::uint8_t> outlier_mask;
};

/**
 * Runs every dimension pass of one level over `recon`. All points on the
 * 2*stride lattice must already be reconstructed; afterwards the whole
 * stride lattice is.
 */
void interpolate_level(std::span<float> recon, const Dims &dims, const Level &level, const PredictorConfig &config,
                       const CompressPass &pass, const Exec &exec = {});
void interpolate_level(std::span<float> recon, const Dims &dims, const Level &level, const PredictorConfig &config,
                       const DecompressPass &pass, const Exec &exec = {});

/// Optionally hands back the compressor-side reconstruction buffer.
QuantizedField compress_predict(const Grid &grid, const PredictorConfig &config, const Exec &exec = {},
                                std::vector<float> *reconstruction = nullptr);

Grid decompress_predict(const QuantizedField &field, const PredictorConfig &config, const Dims &dims,
                        const Exec &exec = {});

}  // namespace cszi

#endif
