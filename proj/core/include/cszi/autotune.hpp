#ifndef CSZI_AUTOTUNE_HPP
#define CSZI_AUTOTUNE_HPP

#include <array>
#include <cstddef>

#include "cszi/error_bound.hpp"
#include "cszi/grid.hpp"
#include "cszi/interp_predictor.hpp"

namespace cszi {

struct ProfileStats {
    std::size_t rank = 0;
    float value_min = 0;
    float value_max = 0;
    double range = 0;
    // [dim][variant], dims slowest first, variant indexed by CubicVariant.
    std::array<std::array<double, 2>, kMaxRank> err_sum{};
    std::array<std::size_t, kMaxRank> sample_count{};
};

/**
 * Samples up to 4 coordinates per dimension (a 4^3 sub-grid in 3D) and at
 * each sample evaluates both cubic variants along every dimension on the
 * original data, accumulating absolute prediction errors.
 */
ProfileStats profile_samples(const Grid &grid);

/// Piecewise-linear error-bound reduction factor of the range-relative bound.
double compute_alpha(double rel_eb) noexcept;

/// Chooses alpha, the per-dimension cubic variant and the dimension order.
PredictorConfig select_config(const ProfileStats &stats, const ErrorBound &eb, const ChunkLayout &layout);

}  // namespace cszi

#endif
