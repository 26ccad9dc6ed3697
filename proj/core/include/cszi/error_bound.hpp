#ifndef CSZI_ERROR_BOUND_HPP
#define CSZI_ERROR_BOUND_HPP

#include <cstdint>
#include <string_view>

namespace cszi {

enum class EbMode : std::uint8_t { Abs = 0, Rel = 1 };

std::string_view to_string(EbMode m) noexcept;

/// User-facing bound. Rel values are fractions of the value range.
struct ErrorBound {
    EbMode mode = EbMode::Rel;
    double value = 1e-3;

    static constexpr ErrorBound absolute(double v) { return {EbMode::Abs, v}; }
    static constexpr ErrorBound relative(double v) { return {EbMode::Rel, v}; }

    /// Absolute bound for data of the given value range. A zero range
    /// resolves a relative bound to the bare value.
    double resolve(double range) const noexcept;

    /// Range-relative bound, the input of the alpha schedule.
    double relative_to(double range) const noexcept;

    bool operator==(const ErrorBound &) const = default;
};

}  // namespace cszi

#endif
