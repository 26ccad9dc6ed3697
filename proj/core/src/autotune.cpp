#include "cszi/autotune.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "cszi/spline.hpp"

namespace cszi {

std::string_view to_string(EbMode m) noexcept { return m == EbMode::Abs ? "abs" : "rel"; }

double ErrorBound::resolve(double range) const noexcept {
    if (mode == EbMode::Abs || range <= 0) return value;
    return value * range;
}

double ErrorBound::relative_to(double range) const noexcept {
    if (mode == EbMode::Rel || range <= 0) return value;
    return value / range;
}

namespace {

constexpr std::size_t kMaxSamplesPerDim = 4;
constexpr std::size_t kSampleSpacing = 7;  // extent needed per sample to keep +-3 neighbors inside

struct SampleAxis {
    std::vector<std::size_t> coords;
    bool profiled = false;
};

SampleAxis sample_axis(std::size_t extent) {
    SampleAxis a;
    const std::size_t k = std::min(kMaxSamplesPerDim, extent / kSampleSpacing);
    if (k == 0) {
        // Too short to test, but the other dimensions still need a coordinate here.
        a.coords.push_back(extent / 2);
        return a;
    }
    a.profiled = true;
    for (std::size_t j = 0; j < k; ++j) {
        const std::size_t c = (j + 1) * extent / (k + 1);
        a.coords.push_back(std::clamp<std::size_t>(c, 3, extent - 4));
    }
    return a;
}

}  // namespace

ProfileStats profile_samples(const Grid &grid) {
    ProfileStats st;
    const auto r = value_range(grid);
    st.rank = grid.dims.rank();
    st.value_min = r.min;
    st.value_max = r.max;
    st.range = r.range;

    const auto ext = grid.dims.padded();
    const std::array<std::size_t, kMaxRank> es{ext[1] * ext[2], ext[2], 1};
    const std::size_t off = kMaxRank - st.rank;

    std::array<SampleAxis, kMaxRank> axes;
    for (std::size_t k = 0; k < kMaxRank; ++k) axes[k] = sample_axis(ext[k]);
    for (std::size_t k = 0; k < off; ++k) axes[k] = SampleAxis{{0}, false};

    auto value = [&](std::size_t idx) { return static_cast<double>(grid.values[idx]); };
    for (auto c0 : axes[0].coords)
        for (auto c1 : axes[1].coords)
            for (auto c2 : axes[2].coords) {
                const std::size_t idx = c0 * es[0] + c1 * es[1] + c2;
                const double actual = value(idx);
                for (std::size_t k = off; k < kMaxRank; ++k) {
                    if (!axes[k].profiled) continue;
                    const std::size_t s = es[k];
                    const double a = value(idx - 3 * s), b = value(idx - s), c = value(idx + s), d = value(idx + 3 * s);
                    const std::size_t dim = k - off;
                    for (auto v : {CubicVariant::NotAKnot, CubicVariant::Natural})
                        st.err_sum[dim][static_cast<std::size_t>(v)] += std::abs(cubic_predict(a, b, c, d, v) - actual);
                    ++st.sample_count[dim];
                }
            }
    return st;
}

double compute_alpha(double eps) noexcept {
    auto ramp = [eps](double base, double lo, double hi) { return base + 0.25 * (eps - lo) / (hi - lo); };
    if (eps >= 1e-1) return 2.0;
    if (eps >= 1e-2) return ramp(1.75, 1e-2, 1e-1);
    if (eps >= 1e-3) return ramp(1.5, 1e-3, 1e-2);
    if (eps >= 1e-4) return ramp(1.25, 1e-4, 1e-3);
    if (eps >= 1e-5) return ramp(1.0, 1e-5, 1e-4);
    return 1.0;
}

PredictorConfig select_config(const ProfileStats &stats, const ErrorBound &eb, const ChunkLayout &layout) {
    PredictorConfig cfg;
    cfg.layout = layout;
    cfg.eb_abs = eb.resolve(stats.range);
    cfg.alpha = compute_alpha(eb.relative_to(stats.range));

    const std::size_t rank = stats.rank;
    for (std::size_t d = 0; d < rank; ++d) {
        const auto &e = stats.err_sum[d];
        cfg.cubic_variant[d] = e[1] < e[0] ? CubicVariant::Natural : CubicVariant::NotAKnot;
    }

    std::vector<std::uint8_t> order(rank);
    std::iota(order.begin(), order.end(), std::uint8_t{0});
    auto total = [&](std::size_t d) { return stats.err_sum[d][0] + stats.err_sum[d][1]; };
    // Least smooth (largest profiled error) first; sums compare directly when
    // sample counts agree, means otherwise.
    std::stable_sort(order.begin(), order.end(), [&](std::uint8_t a, std::uint8_t b) {
        const auto na = stats.sample_count[a], nb = stats.sample_count[b];
        if (na == 0 || nb == 0) return na != 0 && nb == 0;
        if (na == nb) return total(a) > total(b);
        return total(a) / static_cast<double>(na) > total(b) / static_cast<double>(nb);
    });
    for (std::size_t p = 0; p < rank; ++p) cfg.dim_order[p] = order[p];
    for (std::size_t p = rank; p < kMaxRank; ++p) cfg.dim_order[p] = static_cast<std::uint8_t>(p);
    return cfg;
}

}  // namespace cszi
