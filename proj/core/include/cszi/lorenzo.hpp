#ifndef CSZI_LORENZO_HPP
#define CSZI_LORENZO_HPP

#include <cstdint>

#include "cszi/grid.hpp"
#include "cszi/interp_predictor.hpp"

namespace cszi {

/// First-order Lorenzo prediction + quantization in raster order. Neighbors
/// outside the grid count as 0. The result carries no anchors.
QuantizedField lorenzo_predict_quantize(const Grid &grid, double eb, std::int32_t radius = kDefaultQuantRadius,
                                        std::vector<float> *reconstruction = nullptr);

Grid lorenzo_reconstruct(const QuantizedField &field, const Dims &dims, double eb);

}  // namespace cszi

#endif
