#include "cszi/compressor.hpp"

#include <chrono>
#include <cmath>
#include <cstring>
#include <string>

#include "cszi/autotune.hpp"
#include "cszi/detail/byte_io.hpp"
#include "cszi/error.hpp"
#include "cszi/huffman.hpp"
#include "cszi/lorenzo.hpp"
#include "cszi/outliers.hpp"

namespace cszi {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

PredictorConfig tuned_config(const Grid &grid, const CompressOptions &opt) {
    const std::size_t rank = grid.dims.rank();
    const ChunkLayout layout = opt.layout.value_or(ChunkLayout::defaults_for(rank));
    PredictorConfig cfg = select_config(profile_samples(grid), opt.eb, layout);
    if (opt.alpha) cfg.alpha = *opt.alpha;
    if (opt.cubic_variants) {
        if (opt.cubic_variants->size() != rank)
            throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(rank) + " cubic variants");
        std::copy(opt.cubic_variants->begin(), opt.cubic_variants->end(), cfg.cubic_variant.begin());
    }
    if (opt.dim_order) {
        if (opt.dim_order->size() != rank)
            throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(rank) + " entries in dim order");
        std::copy(opt.dim_order->begin(), opt.dim_order->end(), cfg.dim_order.begin());
    }
    cfg.quant_radius = opt.quant_radius;
    cfg.validate(grid.dims);
    return cfg;
}

}  // namespace

PredictorConfig config_from_header(const ArchiveHeader &h) {
    PredictorConfig cfg;
    cfg.layout.rank = h.dims.rank();
    cfg.layout.anchor_stride = h.anchor_stride;
    cfg.layout.super_chunk = h.super_chunk;
    cfg.alpha = h.alpha;
    cfg.cubic_variant = h.cubic_variant;
    cfg.dim_order = h.dim_order;
    cfg.quant_radius = static_cast<std::int32_t>(h.quant_radius);
    cfg.eb_abs = h.eb_abs;
    return cfg;
}

CompressResult compress(const Grid &grid, const CompressOptions &opt) {
    if (grid.size() != grid.dims.size() || grid.size() == 0)
        throw Error(ErrorCode::InvalidArgument, "grid values disagree with dims");
    if (!(opt.eb.value > 0) || !std::isfinite(opt.eb.value))
        throw Error(ErrorCode::InvalidArgument, "error bound must be positive and finite");

    CompressResult res;
    ArchiveHeader &h = res.header;
    h.predictor = opt.predictor;
    h.pass2 = opt.pass2;
    h.pass2_codec = opt.pass2_codec;
    h.dims = grid.dims;
    h.eb = opt.eb;
    h.quant_radius = static_cast<std::uint32_t>(opt.quant_radius);
    h.dim_order = {0, 1, 2};

    const auto t0 = Clock::now();
    QuantizedField field;
    if (opt.predictor == PredictorKind::Interp) {
        const PredictorConfig cfg = tuned_config(grid, opt);
        field = compress_predict(grid, cfg, opt.exec);
        h.eb_abs = cfg.eb_abs;
        h.alpha = cfg.alpha;
        h.cubic_variant = cfg.cubic_variant;
        h.dim_order = cfg.dim_order;
        h.anchor_stride = cfg.layout.anchor_stride;
        h.super_chunk = cfg.layout.super_chunk;
    } else {
        h.eb_abs = opt.eb.resolve(value_range(grid).range);
        h.alpha = 1.0;
        field = lorenzo_predict_quantize(grid, h.eb_abs, opt.quant_radius);
    }
    res.predict_seconds = seconds_since(t0);
    res.nonzero_codes = field.nonzero_codes();
    res.outlier_count = field.outliers.size();

    const auto t1 = Clock::now();
    Archive a;
    a.header = h;
    detail::ByteWriter anchors(a.anchors);
    for (const auto &v : field.anchors) anchors.put<float>(v.value);
    const Codebook book = build_codebook(build_histogram(field.codes, opt.quant_radius));
    a.codebook = book.lengths();
    BitStream stream = encode_quant_codes(field.codes, opt.quant_radius, book);
    a.header.code_bit_count = stream.bit_count;
    a.code_stream = std::move(stream.bytes);
    a.outliers = compact_outliers(field.outliers);
    res.bytes = serialize_archive(a);
    res.header = a.header;
    res.encode_seconds = seconds_since(t1);
    return res;
}

Grid decompress(std::span<const std::uint8_t> bytes, const Exec &exec) {
    Archive a = parse_archive(bytes);
    const ArchiveHeader &h = a.header;
    const std::size_t n = h.dims.size();
    if (h.quant_radius < 2 || a.codebook.size() != 2 * std::size_t{h.quant_radius})
        throw Error(ErrorCode::MalformedSection, "codebook size disagrees with the quantization radius");

    const Codebook book = Codebook::from_lengths(std::move(a.codebook));
    QuantizedField field;
    field.codes = decode_quant_codes(BitStream{std::move(a.code_stream), h.code_bit_count},
                                     static_cast<std::int32_t>(h.quant_radius), book, n);
    field.outliers = expand_outliers(a.outliers);
    if (!field.outliers.empty() && field.outliers.back().index >= n)
        throw Error(ErrorCode::MalformedSection, "outlier index beyond the grid");

    if (h.predictor == PredictorKind::Lorenzo) {
        if (!a.anchors.empty()) throw Error(ErrorCode::MalformedSection, "Lorenzo archive carries anchors");
        return lorenzo_reconstruct(field, h.dims, h.eb_abs);
    }

    const PredictorConfig cfg = config_from_header(h);
    try {
        cfg.validate(h.dims);
    } catch (const Error &e) {
        throw Error(ErrorCode::MalformedSection, e.what());
    }
    const auto idx = anchor_indices(h.dims, cfg.layout.anchor_stride);
    if (a.anchors.size() != idx.size() * sizeof(float))
        throw Error(ErrorCode::MalformedSection, "anchor section size disagrees with the lattice");
    field.anchors.resize(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        field.anchors[i].index = idx[i];
        std::memcpy(&field.anchors[i].value, a.anchors.data() + i * sizeof(float), sizeof(float));
    }
    return decompress_predict(field, cfg, h.dims, exec);
}

}  // namespace cszi
