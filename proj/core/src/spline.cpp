#include "cszi/spline.hpp"

#include "cszi/error.hpp"

namespace cszi {

std::string_view to_string(CubicVariant v) noexcept {
    return v == CubicVariant::NotAKnot ? "not-a-knot" : "natural";
}

std::array<double, 4> cubic_weights(CubicVariant variant) noexcept {
    if (variant == CubicVariant::NotAKnot) return {-1.0 / 16, 9.0 / 16, 9.0 / 16, -1.0 / 16};
    return {-3.0 / 40, 23.0 / 40, 23.0 / 40, -3.0 / 40};
}

double spline_predict(const Stencil &s, CubicVariant variant) {
    if (!s.available[Stencil::kLeft]) throw Error(ErrorCode::NoNeighbor, "the -s neighbor is required");
    return detail::spline_predict_from(s.available[Stencil::kFar], s.value[Stencil::kFar], s.value[Stencil::kLeft],
                                       s.available[Stencil::kRight], s.value[Stencil::kRight],
                                       s.available[Stencil::kFarRight], s.value[Stencil::kFarRight], variant);
}

}  // namespace cszi
