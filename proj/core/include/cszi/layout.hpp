#ifndef CSZI_LAYOUT_HPP
#define CSZI_LAYOUT_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "cszi/grid.hpp"

namespace cszi {

/**
 * Anchor lattice and super-chunk tiling. Predictions read neighbors only
 * inside the predicted point's super-chunk view, i.e. the tile plus its
 * closing plane in every dimension (33x9x9 for the 3D default).
 */
struct ChunkLayout {
    std::uint32_t anchor_stride = 8;
    std::size_t rank = 3;
    std::array<std::uint32_t, kMaxRank> super_chunk{};  // first `rank` entries used, slowest first

    /// 3D: stride 8, tile 8x8x32. 2D: stride 16, tile 16x16. 1D: stride 512, tile 512.
    static ChunkLayout defaults_for(std::size_t rank);

    /// Throws InvalidStride / InvalidArgument when the layout is unusable.
    void validate() const;

    bool operator==(const ChunkLayout &) const = default;
};

struct Level {
    unsigned index;  // 1 is the finest level
    std::size_t stride;
    double eb;
};

struct LevelPlan {
    std::vector<Level> levels;  // execution order: coarsest first
    double global_eb;
    double alpha;
};

/// Level ebs follow eb_l = eb / alpha^(l-1), with l = log2(stride) + 1.
LevelPlan plan_levels(std::size_t anchor_stride, double eb, double alpha);

struct IndexedValue {
    std::uint64_t index;
    float value;
    bool operator==(const IndexedValue &) const = default;
};

/// Every point whose coordinates are all multiples of `stride`, ascending flat index.
std::vector<IndexedValue> gather_anchors(const Grid &grid, std::size_t stride);

/// Flat indices of the anchor lattice, ascending.
std::vector<std::uint64_t> anchor_indices(const Dims &dims, std::size_t stride);

/// Size of the anchor lattice without touching data.
std::size_t anchor_count(const Dims &dims, std::size_t stride) noexcept;

}  // namespace cszi

#endif
