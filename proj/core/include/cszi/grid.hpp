#ifndef CSZI_GRID_HPP
#define CSZI_GRID_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <span>
#include <vector>

namespace cszi {

constexpr std::size_t kMaxRank = 3;

/**
 * Shape of a 1D/2D/3D array. Extents are ordered slowest-varying first, so
 * the last listed dimension is contiguous in memory.
 */
class Dims {
   public:
    Dims() = default;
    Dims(std::initializer_list<std::size_t> extents);
    explicit Dims(std::span<const std::size_t> extents);

    std::size_t rank() const noexcept { return rank_; }
    std::size_t extent(std::size_t d) const noexcept { return ext_[d]; }
    std::span<const std::size_t> extents() const noexcept { return {ext_.data(), rank_}; }
    std::size_t size() const noexcept;

    /// Extents left-padded with 1 to rank 3; dimension d maps to padded index d + (3 - rank).
    std::array<std::size_t, kMaxRank> padded() const noexcept;

    bool operator==(const Dims &) const = default;

   private:
    std::size_t rank_ = 0;
    std::array<std::size_t, kMaxRank> ext_{};
};

struct Grid {
    Dims dims;
    std::vector<float> values;

    Grid() = default;
    Grid(Dims d, std::vector<float> v);
    explicit Grid(Dims d);

    std::size_t size() const noexcept { return values.size(); }
};

struct ValueRange {
    float min;
    float max;
    double range;
};

/// Reads little-endian binary32 values. Rejects NaN/Inf and size mismatches.
Grid load_raw(const std::filesystem::path &path, const Dims &dims);
void store_raw(const Grid &grid, const std::filesystem::path &path);

/// Raw-byte variants used by the file functions and by in-memory callers.
Grid decode_raw(std::span<const std::uint8_t> bytes, const Dims &dims);
std::vector<std::uint8_t> encode_raw(std::span<const float> values);

ValueRange value_range(std::span<const float> values);
inline ValueRange value_range(const Grid &grid) { return value_range(grid.values); }

}  // namespace cszi

#endif
