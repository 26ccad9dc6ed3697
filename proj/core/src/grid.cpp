#include "cszi/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <string>

#include "cszi/error.hpp"

namespace cszi {

namespace {

void check_extents(std::span<const std::size_t> extents) {
    if (extents.empty() || extents.size() > kMaxRank)
        throw Error(ErrorCode::InvalidArgument, "rank must be 1, 2 or 3, got " + std::to_string(extents.size()));
    for (auto e : extents)
        if (e == 0) throw Error(ErrorCode::InvalidArgument, "extents must be positive");
}

}  // namespace

Dims::Dims(std::initializer_list<std::size_t> extents) : Dims(std::span<const std::size_t>(extents.begin(), extents.size())) {}

Dims::Dims(std::span<const std::size_t> extents) {
    check_extents(extents);
    rank_ = extents.size();
    std::copy(extents.begin(), extents.end(), ext_.begin());
}

std::size_t Dims::size() const noexcept {
    if (rank_ == 0) return 0;
    std::size_t n = 1;
    for (std::size_t d = 0; d < rank_; ++d) n *= ext_[d];
    return n;
}

std::array<std::size_t, kMaxRank> Dims::padded() const noexcept {
    std::array<std::size_t, kMaxRank> p{1, 1, 1};
    const std::size_t off = kMaxRank - rank_;
    for (std::size_t d = 0; d < rank_; ++d) p[off + d] = ext_[d];
    return p;
}

Grid::Grid(Dims d, std::vector<float> v) : dims(d), values(std::move(v)) {
    if (values.size() != dims.size())
        throw Error(ErrorCode::SizeMismatch,
                    "value count " + std::to_string(values.size()) + " != element count " + std::to_string(dims.size()));
}

Grid::Grid(Dims d) : dims(d), values(d.size(), 0.0f) {}

Grid decode_raw(std::span<const std::uint8_t> bytes, const Dims &dims) {
    const std::size_t n = dims.size();
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "empty dims");
    if (bytes.size() != n * sizeof(float))
        throw Error(ErrorCode::SizeMismatch,
                    "expected " + std::to_string(n * sizeof(float)) + " bytes, got " + std::to_string(bytes.size()));
    std::vector<float> values(n);
    std::memcpy(values.data(), bytes.data(), bytes.size());
    for (std::size_t i = 0; i < n; ++i)
        if (!std::isfinite(values[i]))
            throw Error(ErrorCode::NonFiniteValue, "non-finite value at index " + std::to_string(i), i);
    return Grid(dims, std::move(values));
}

std::vector<std::uint8_t> encode_raw(std::span<const float> values) {
    std::vector<std::uint8_t> out(values.size_bytes());
    std::memcpy(out.data(), values.data(), out.size());
    return out;
}

Grid load_raw(const std::filesystem::path &path, const Dims &dims) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoFailure, "cannot open '" + path.string() + "'");
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw Error(ErrorCode::IoFailure, "read failed on '" + path.string() + "'");
    return decode_raw(bytes, dims);
}

void store_raw(const Grid &grid, const std::filesystem::path &path) {
    if (path.empty()) throw Error(ErrorCode::IoFailure, "empty output path");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoFailure, "cannot open '" + path.string() + "' for writing");
    const auto bytes = encode_raw(grid.values);
    out.write(reinterpret_cast<const char *>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error(ErrorCode::IoFailure, "write failed on '" + path.string() + "'");
}

ValueRange value_range(std::span<const float> values) {
    if (values.empty()) throw Error(ErrorCode::InvalidArgument, "value_range of empty data");
    auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    return {*lo, *hi, static_cast<double>(*hi) - static_cast<double>(*lo)};
}

}  // namespace cszi
