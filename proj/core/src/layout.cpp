#include "cszi/layout.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "cszi/error.hpp"

namespace cszi {

ChunkLayout ChunkLayout::defaults_for(std::size_t rank) {
    ChunkLayout l;
    l.rank = rank;
    switch (rank) {
        case 1: l.anchor_stride = 512; l.super_chunk = {512, 0, 0}; break;
        case 2: l.anchor_stride = 16; l.super_chunk = {16, 16, 0}; break;
        case 3: l.anchor_stride = 8; l.super_chunk = {8, 8, 32}; break;
        default: throw Error(ErrorCode::InvalidArgument, "rank must be 1, 2 or 3");
    }
    return l;
}

void ChunkLayout::validate() const {
    if (rank < 1 || rank > kMaxRank) throw Error(ErrorCode::InvalidArgument, "layout rank must be 1, 2 or 3");
    if (anchor_stride < 2 || !std::has_single_bit(anchor_stride))
        throw Error(ErrorCode::InvalidStride, "anchor stride must be a power of two >= 2, got " + std::to_string(anchor_stride));
    for (std::size_t d = 0; d < rank; ++d) {
        const auto t = super_chunk[d];
        if (t < anchor_stride || t % anchor_stride != 0)
            throw Error(ErrorCode::InvalidArgument, "super-chunk extent " + std::to_string(t) +
                                                        " is not a positive multiple of the anchor stride");
    }
}

LevelPlan plan_levels(std::size_t anchor_stride, double eb, double alpha) {
    if (anchor_stride < 2 || !std::has_single_bit(anchor_stride))
        throw Error(ErrorCode::InvalidStride, "anchor stride must be a power of two >= 2, got " + std::to_string(anchor_stride));
    if (!(eb > 0)) throw Error(ErrorCode::InvalidArgument, "error bound must be positive");
    if (!(alpha >= 1)) throw Error(ErrorCode::InvalidArgument, "alpha must be >= 1");
    LevelPlan plan{{}, eb, alpha};
    for (std::size_t s = anchor_stride / 2; s >= 1; s /= 2) {
        const unsigned index = static_cast<unsigned>(std::countr_zero(s)) + 1;
        plan.levels.push_back({index, s, eb / std::pow(alpha, static_cast<double>(index - 1))});
    }
    return plan;
}

std::size_t anchor_count(const Dims &dims, std::size_t stride) noexcept {
    std::size_t n = 1;
    for (auto e : dims.extents()) n *= (e - 1) / stride + 1;
    return n;
}

std::vector<std::uint64_t> anchor_indices(const Dims &dims, std::size_t stride) {
    if (stride < 2) throw Error(ErrorCode::InvalidStride, "anchor stride must be >= 2");
    const auto ext = dims.padded();
    std::vector<std::uint64_t> out;
    out.reserve(anchor_count(dims, stride));
    for (std::size_t i = 0; i < ext[0]; i += stride)
        for (std::size_t j = 0; j < ext[1]; j += stride)
            for (std::size_t k = 0; k < ext[2]; k += stride) out.push_back((i * ext[1] + j) * ext[2] + k);
    return out;
}

std::vector<IndexedValue> gather_anchors(const Grid &grid, std::size_t stride) {
    const auto idx = anchor_indices(grid.dims, stride);
    std::vector<IndexedValue> out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back({i, grid.values[i]});
    return out;
}

}  // namespace cszi
