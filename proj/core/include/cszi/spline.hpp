#ifndef CSZI_SPLINE_HPP
#define CSZI_SPLINE_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <string_view>

namespace cszi {

enum class CubicVariant : std::uint8_t { NotAKnot = 0, Natural = 1 };

std::string_view to_string(CubicVariant v) noexcept;

/// Neighbors along one dimension at offsets {-3s, -s, +s, +3s}.
struct Stencil {
    enum Slot { kFar = 0, kLeft = 1, kRight = 2, kFarRight = 3 };
    std::array<double, 4> value{};
    std::array<bool, 4> available{};
};

/**
 * 1D spline prediction of the midpoint between the -s and +s neighbors.
 * The spline order follows neighbor availability: cubic with all four,
 * quadratic with three, linear with both immediate neighbors, otherwise a
 * copy of the -s neighbor. Throws NoNeighbor when -s is missing.
 */
double spline_predict(const Stencil &stencil, CubicVariant variant);

/// Weights of the two cubic variants, ordered {-3s, -s, +s, +3s}.
std::array<double, 4> cubic_weights(CubicVariant variant) noexcept;

/// Cubic prediction with all four neighbors present.
inline double cubic_predict(double far_left, double left, double right, double far_right, CubicVariant v) noexcept {
    if (v == CubicVariant::NotAKnot) return (-far_left + 9.0 * left + 9.0 * right - far_right) / 16.0;
    return (-3.0 * far_left + 23.0 * left + 23.0 * right - 3.0 * far_right) / 40.0;
}

namespace detail {

// Hot-loop form of spline_predict; the -s neighbor is assumed present.
inline double spline_predict_from(bool has_far, double far_left, double left, bool has_right, double right,
                                  bool has_far_right, double far_right, CubicVariant v) noexcept {
    if (!has_right) return left;
    if (has_far && has_far_right) return cubic_predict(far_left, left, right, far_right, v);
    if (has_far) return (-far_left + 6.0 * left + 3.0 * right) / 8.0;
    if (has_far_right) return (3.0 * left + 6.0 * right - far_right) / 8.0;
    return (left + right) / 2.0;
}

}  // namespace detail

struct QuantResult {
    bool outlier;
    std::int32_t code;  // 0 when outlier
};

/**
 * Linear quantization of a prediction error in units of 2*eb, rounding half
 * away from zero. |q| >= radius makes the point an outlier.
 */
inline QuantResult quantize(double original, double predicted, double eb, std::int32_t radius) noexcept {
    const double scaled = (original - predicted) / (2.0 * eb);
    // Compare before rounding so huge errors never overflow the integer cast.
    if (!(std::abs(scaled) < static_cast<double>(radius))) return {true, 0};
    const double q = std::round(scaled);
    if (std::abs(q) >= static_cast<double>(radius)) return {true, 0};
    return {false, static_cast<std::int32_t>(q)};
}

inline double dequantize(double predicted, double eb, std::int32_t code) noexcept {
    return predicted + 2.0 * eb * static_cast<double>(code);
}

}  // namespace cszi

#endif
