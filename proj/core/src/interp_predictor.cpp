#include "cszi/interp_predictor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cszi/error.hpp"

namespace cszi {

namespace {

constexpr std::size_t kDims = kMaxRank;

// Lattice subset visited by one (level, dimension) pass, in padded 3D coordinates.
struct PassGeometry {
    std::array<std::size_t, kDims> start{};
    std::array<std::size_t, kDims> step{};
    std::array<std::size_t, kDims> count{};
    std::size_t axis = 0;  // padded index of the interpolated dimension

    std::size_t total() const noexcept { return count[0] * count[1] * count[2]; }
};

struct Shape {
    std::array<std::size_t, kDims> ext{};
    std::array<std::size_t, kDims> elem_stride{};
    std::array<std::size_t, kDims> tile{};
    std::size_t offset = 0;  // padded index of actual dimension 0
};

Shape make_shape(const Dims &dims, const ChunkLayout &layout) {
    Shape sh;
    sh.ext = dims.padded();
    sh.elem_stride = {sh.ext[1] * sh.ext[2], sh.ext[2], 1};
    sh.offset = kDims - dims.rank();
    sh.tile = {1, 1, 1};
    for (std::size_t d = 0; d < dims.rank(); ++d) sh.tile[sh.offset + d] = layout.super_chunk[d];
    return sh;
}

PassGeometry make_pass(const Shape &sh, const PredictorConfig &cfg, std::size_t pass, std::size_t stride) {
    PassGeometry g;
    std::array<bool, kDims> done{};
    for (std::size_t p = 0; p < pass; ++p) done[sh.offset + cfg.dim_order[p]] = true;
    g.axis = sh.offset + cfg.dim_order[pass];
    for (std::size_t k = 0; k < kDims; ++k) {
        if (k == g.axis) {
            g.start[k] = stride;
            g.step[k] = 2 * stride;
        } else {
            g.start[k] = 0;
            g.step[k] = done[k] ? stride : 2 * stride;
        }
        g.count[k] = g.start[k] < sh.ext[k] ? (sh.ext[k] - 1 - g.start[k]) / g.step[k] + 1 : 0;
    }
    return g;
}

// Visits pass points in raster order, chunked across workers. Points within a
// pass never read each other, so the split cannot change results.
template <class Fn>
void for_each_point(const PassGeometry &g, const Exec &exec, Fn &&fn) {
    const std::size_t n1 = g.count[1], n2 = g.count[2];
    parallel_for(g.total(), exec, [&](std::size_t begin, std::size_t end) {
        std::size_t i2 = begin % n2, i1 = (begin / n2) % n1, i0 = begin / (n1 * n2);
        for (std::size_t t = begin; t < end; ++t) {
            fn(std::array<std::size_t, kDims>{g.start[0] + i0 * g.step[0], g.start[1] + i1 * g.step[1],
                                              g.start[2] + i2 * g.step[2]});
            if (++i2 == n2) {
                i2 = 0;
                if (++i1 == n1) {
                    i1 = 0;
                    ++i0;
                }
            }
        }
    });
}

// Prediction of `idx` from neighbors along `axis`, restricted to the grid and
// to the point's super-chunk view [tile base, tile base + tile].
inline double predict_point(std::span<const float> recon, const Shape &sh, std::size_t axis, std::size_t coord,
                            std::size_t idx, std::size_t s, CubicVariant variant) noexcept {
    const std::size_t t = sh.tile[axis];
    const std::size_t lo = coord / t * t;
    const std::size_t hi = std::min(lo + t, sh.ext[axis] - 1);
    const std::size_t es = sh.elem_stride[axis];
    const bool has_far = coord >= lo + 3 * s;
    const bool has_right = coord + s <= hi;
    const bool has_far_right = coord + 3 * s <= hi;
    const double left = recon[idx - s * es];
    const double far_left = has_far ? recon[idx - 3 * s * es] : 0.0;
    const double right = has_right ? recon[idx + s * es] : 0.0;
    const double far_right = has_far_right ? recon[idx + 3 * s * es] : 0.0;
    return detail::spline_predict_from(has_far, far_left, left, has_right, right, has_far_right, far_right, variant);
}

template <class PointFn>
void run_level(const Dims &dims, const Level &level, const PredictorConfig &config, const Exec &exec,
               PointFn &&point) {
    const Shape sh = make_shape(dims, config.layout);
    for (std::size_t p = 0; p < dims.rank(); ++p) {
        const PassGeometry g = make_pass(sh, config, p, level.stride);
        if (g.total() == 0) continue;
        const CubicVariant variant = config.cubic_variant[config.dim_order[p]];
        for_each_point(g, exec, [&](const std::array<std::size_t, kDims> &c) {
            const std::size_t idx = c[0] * sh.elem_stride[0] + c[1] * sh.elem_stride[1] + c[2];
            point(sh, g.axis, c[g.axis], idx, variant);
        });
    }
}

std::vector<std::uint8_t> outlier_mask_for(const QuantizedField &field, std::size_t n) {
    std::vector<std::uint8_t> mask(n, 0);
    for (const auto &o : field.outliers) {
        if (o.index >= n) throw Error(ErrorCode::Inconsistent, "outlier index out of range");
        mask[o.index] = 1;
    }
    return mask;
}

}  // namespace

void PredictorConfig::validate(const Dims &dims) const {
    layout.validate();
    if (layout.rank != dims.rank())
        throw Error(ErrorCode::Inconsistent, "layout rank " + std::to_string(layout.rank) + " != grid rank " +
                                                 std::to_string(dims.rank()));
    std::array<bool, kMaxRank> seen{};
    for (std::size_t p = 0; p < dims.rank(); ++p) {
        const auto d = dim_order[p];
        if (d >= dims.rank() || seen[d]) throw Error(ErrorCode::InvalidArgument, "dim_order is not a permutation");
        seen[d] = true;
    }
    for (std::size_t d = 0; d < dims.rank(); ++d)
        if (cubic_variant[d] != CubicVariant::NotAKnot && cubic_variant[d] != CubicVariant::Natural)
            throw Error(ErrorCode::InvalidArgument, "unknown cubic variant");
    if (quant_radius < 2) throw Error(ErrorCode::InvalidArgument, "quantization radius must be >= 2");
    if (!(eb_abs > 0) || !std::isfinite(eb_abs)) throw Error(ErrorCode::InvalidArgument, "eb must be positive");
    if (!(alpha >= 1) || !std::isfinite(alpha)) throw Error(ErrorCode::InvalidArgument, "alpha must be >= 1");
}

PredictorConfig PredictorConfig::defaults_for(const Dims &dims, double eb_abs) {
    PredictorConfig c;
    c.layout = ChunkLayout::defaults_for(dims.rank());
    c.eb_abs = eb_abs;
    return c;
}

std::size_t QuantizedField::nonzero_codes() const noexcept {
    return static_cast<std::size_t>(std::count_if(codes.begin(), codes.end(), [](auto q) { return q != 0; }));
}

void interpolate_level(std::span<float> recon, const Dims &dims, const Level &level, const PredictorConfig &config,
                       const CompressPass &pass, const Exec &exec) {
    const double eb = level.eb;
    const std::int32_t radius = config.quant_radius;
    run_level(dims, level, config, exec,
              [&](const auto &sh, std::size_t axis, std::size_t coord, std::size_t idx, CubicVariant v) {
                  const double pred = predict_point(recon, sh, axis, coord, idx, level.stride, v);
                  const float orig = pass.original[idx];
                  QuantResult q = quantize(orig, pred, eb, radius);
                  float value = orig;
                  if (!q.outlier) {
                      value = static_cast<float>(dequantize(pred, eb, q.code));
                      // Float rounding of the reconstruction may overshoot the bound.
                      if (std::abs(static_cast<double>(value) - static_cast<double>(orig)) > eb) {
                          q = {true, 0};
                          value = orig;
                      }
                  }
                  recon[idx] = value;
                  pass.codes[idx] = q.code;
                  pass.outlier_mask[idx] = q.outlier ? 1 : 0;
              });
}

void interpolate_level(std::span<float> recon, const Dims &dims, const Level &level, const PredictorConfig &config,
                       const DecompressPass &pass, const Exec &exec) {
    const double eb = level.eb;
    run_level(dims, level, config, exec,
              [&](const auto &sh, std::size_t axis, std::size_t coord, std::size_t idx, CubicVariant v) {
                  if (pass.outlier_mask[idx]) return;
                  const double pred = predict_point(recon, sh, axis, coord, idx, level.stride, v);
                  recon[idx] = static_cast<float>(dequantize(pred, eb, pass.codes[idx]));
              });
}

QuantizedField compress_predict(const Grid &grid, const PredictorConfig &config, const Exec &exec,
                                std::vector<float> *reconstruction) {
    config.validate(grid.dims);
    const std::size_t n = grid.size();
    QuantizedField field;
    field.codes.assign(n, 0);
    field.anchors = gather_anchors(grid, config.layout.anchor_stride);

    std::vector<float> recon(n, 0.0f);
    for (const auto &a : field.anchors) recon[a.index] = a.value;

    std::vector<std::uint8_t> mask(n, 0);
    const CompressPass pass{grid.values, field.codes, mask};
    const LevelPlan plan = plan_levels(config.layout.anchor_stride, config.eb_abs, config.alpha);
    for (const auto &level : plan.levels) interpolate_level(recon, grid.dims, level, config, pass, exec);

    for (std::size_t i = 0; i < n; ++i)
        if (mask[i]) field.outliers.push_back({i, grid.values[i]});
    if (reconstruction) *reconstruction = std::move(recon);
    return field;
}

Grid decompress_predict(const QuantizedField &field, const PredictorConfig &config, const Dims &dims,
                        const Exec &exec) {
    config.validate(dims);
    const std::size_t n = dims.size();
    if (field.codes.size() != n)
        throw Error(ErrorCode::Inconsistent,
                    "code count " + std::to_string(field.codes.size()) + " != element count " + std::to_string(n));
    if (field.anchors.size() != anchor_count(dims, config.layout.anchor_stride))
        throw Error(ErrorCode::Inconsistent, "anchor count does not match the lattice");

    Grid out(dims);
    for (const auto &a : field.anchors) {
        if (a.index >= n) throw Error(ErrorCode::Inconsistent, "anchor index out of range");
        out.values[a.index] = a.value;
    }
    const auto mask = outlier_mask_for(field, n);
    for (const auto &o : field.outliers) out.values[o.index] = o.value;

    const DecompressPass pass{field.codes, mask};
    const LevelPlan plan = plan_levels(config.layout.anchor_stride, config.eb_abs, config.alpha);
    for (const auto &level : plan.levels) interpolate_level(out.values, dims, level, config, pass, exec);
    return out;
}

}  // namespace cszi
