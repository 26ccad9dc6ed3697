#ifndef CSZI_OUTLIERS_HPP
#define CSZI_OUTLIERS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "cszi/layout.hpp"

namespace cszi {

/// u64 count, then (u64 flat index, f32 value) pairs, little-endian.
std::vector<std::uint8_t> compact_outliers(std::span<const IndexedValue> outliers);

/// Throws MalformedSection on bad length or non-increasing indices.
std::vector<IndexedValue> expand_outliers(std::span<const std::uint8_t> section);

}  // namespace cszi

#endif
