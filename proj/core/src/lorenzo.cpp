#include "cszi/lorenzo.hpp"

#include <cmath>
#include <string>

#include "cszi/error.hpp"
#include "cszi/spline.hpp"

namespace cszi {

namespace {

// Raster-order driver shared by both directions. `visit(idx, prediction)`
// must leave the reconstructed value in recon[idx].
template <class Visit>
void lorenzo_scan(const Dims &dims, std::span<const float> recon, Visit &&visit) {
    const auto ext = dims.padded();
    const std::size_t sj = ext[2], si = ext[1] * ext[2];
    auto at = [&](std::size_t idx) { return static_cast<double>(recon[idx]); };
    for (std::size_t i = 0; i < ext[0]; ++i)
        for (std::size_t j = 0; j < ext[1]; ++j)
            for (std::size_t k = 0; k < ext[2]; ++k) {
                const std::size_t idx = i * si + j * sj + k;
                const bool bi = i > 0, bj = j > 0, bk = k > 0;
                double p = 0;
                if (bk) p += at(idx - 1);
                if (bj) p += at(idx - sj);
                if (bi) p += at(idx - si);
                if (bj && bk) p -= at(idx - sj - 1);
                if (bi && bk) p -= at(idx - si - 1);
                if (bi && bj) p -= at(idx - si - sj);
                if (bi && bj && bk) p += at(idx - si - sj - 1);
                visit(idx, p);
            }
}

}  // namespace

QuantizedField lorenzo_predict_quantize(const Grid &grid, double eb, std::int32_t radius,
                                        std::vector<float> *reconstruction) {
    if (!(eb > 0) || !std::isfinite(eb)) throw Error(ErrorCode::InvalidArgument, "eb must be positive");
    if (radius < 2) throw Error(ErrorCode::InvalidArgument, "quantization radius must be >= 2");
    const std::size_t n = grid.size();
    QuantizedField field;
    field.codes.assign(n, 0);
    std::vector<float> recon(n, 0.0f);
    lorenzo_scan(grid.dims, recon, [&](std::size_t idx, double pred) {
        const float orig = grid.values[idx];
        QuantResult q = quantize(orig, pred, eb, radius);
        float value = orig;
        if (!q.outlier) {
            value = static_cast<float>(dequantize(pred, eb, q.code));
            if (std::abs(static_cast<double>(value) - static_cast<double>(orig)) > eb) q = {true, 0};
        }
        if (q.outlier) {
            value = orig;
            field.outliers.push_back({idx, orig});
        }
        recon[idx] = value;
        field.codes[idx] = q.code;
    });
    if (reconstruction) *reconstruction = std::move(recon);
    return field;
}

Grid lorenzo_reconstruct(const QuantizedField &field, const Dims &dims, double eb) {
    const std::size_t n = dims.size();
    if (field.codes.size() != n)
        throw Error(ErrorCode::Inconsistent,
                    "code count " + std::to_string(field.codes.size()) + " != element count " + std::to_string(n));
    Grid out(dims);
    std::vector<std::uint8_t> mask(n, 0);
    for (const auto &o : field.outliers) {
        if (o.index >= n) throw Error(ErrorCode::Inconsistent, "outlier index out of range");
        mask[o.index] = 1;
        out.values[o.index] = o.value;
    }
    lorenzo_scan(dims, out.values, [&](std::size_t idx, double pred) {
        if (!mask[idx]) out.values[idx] = static_cast<float>(dequantize(pred, eb, field.codes[idx]));
    });
    return out;
}

}  // namespace cszi
