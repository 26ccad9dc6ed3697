// cszi: compress / decompress / verify / sweep / info for raw float32 grids.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cszi/compressor.hpp"
#include "cszi/error.hpp"
#include "cszi/metrics.hpp"
#include "cszi/sweep.hpp"

namespace fs = std::filesystem;

namespace {

enum Exit : int { kOk = 0, kOther = 1, kUsage = 2, kIo = 3, kFormat = 4, kVerify = 5 };

int exit_for(cszi::ErrorCode c) {
    using cszi::ErrorCode;
    switch (c) {
        case ErrorCode::InvalidArgument:
        case ErrorCode::InvalidStride:
            return kUsage;
        case ErrorCode::IoFailure:
            return kIo;
        case ErrorCode::SizeMismatch:
        case ErrorCode::NonFiniteValue:
        case ErrorCode::DimsMismatch:
        case ErrorCode::TruncatedStream:
        case ErrorCode::MalformedSection:
        case ErrorCode::Corrupt:
        case ErrorCode::BadMagic:
        case ErrorCode::VersionUnsupported:
        case ErrorCode::LengthMismatch:
        case ErrorCode::UnknownCodec:
            return kFormat;
        default:
            return kOther;
    }
}

struct Options {
    std::string input, output, second;
    std::vector<std::size_t> dims;
    std::vector<double> ebs;
    std::string mode = "rel";
    std::string predictor = "interp";
    std::string pass2 = "on";
    int codec = 0;
    std::optional<double> alpha;
    std::vector<std::string> variants;
    std::vector<int> dim_order;
    std::string report = "csv";
};

std::vector<std::uint8_t> read_file(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw cszi::Error(cszi::ErrorCode::IoFailure, "cannot open " + p.string());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const fs::path &p, const std::vector<std::uint8_t> &bytes) {
    std::ofstream out(p, std::ios::binary);
    out.write(reinterpret_cast<const char *>(bytes.data()), std::streamsize(bytes.size()));
    if (!out) throw cszi::Error(cszi::ErrorCode::IoFailure, "cannot write " + p.string());
}

cszi::ErrorBound bound(const Options &o, double v) {
    return o.mode == "abs" ? cszi::ErrorBound::absolute(v) : cszi::ErrorBound::relative(v);
}

cszi::PredictorKind predictor_of(const std::string &s) {
    return s == "lorenzo" ? cszi::PredictorKind::Lorenzo : cszi::PredictorKind::Interp;
}

std::string join_variants(const cszi::ArchiveHeader &h) {
    std::string s;
    for (std::size_t d = 0; d < h.dims.rank(); ++d) s += (d ? "," : "") + std::string(cszi::to_string(h.cubic_variant[d]));
    return s;
}

std::string join_order(const cszi::ArchiveHeader &h) {
    std::string s;
    for (std::size_t d = 0; d < h.dims.rank(); ++d) s += (d ? "," : "") + std::to_string(h.dim_order[d]);
    return s;
}

int cmd_compress(const Options &o) {
    const cszi::Grid grid = cszi::load_raw(o.input, cszi::Dims(o.dims));
    cszi::CompressOptions opt;
    opt.eb = bound(o, o.ebs.front());
    opt.predictor = predictor_of(o.predictor);
    opt.pass2 = o.pass2 != "off";
    opt.pass2_codec = std::uint8_t(o.codec);
    opt.alpha = o.alpha;
    if (!o.variants.empty()) {
        std::vector<cszi::CubicVariant> v;
        for (const auto &s : o.variants)
            v.push_back(s == "natural" ? cszi::CubicVariant::Natural : cszi::CubicVariant::NotAKnot);
        opt.cubic_variants = v;
    }
    if (!o.dim_order.empty()) opt.dim_order = std::vector<std::uint8_t>(o.dim_order.begin(), o.dim_order.end());

    const auto res = cszi::compress(grid, opt);
    const fs::path out = o.output.empty() ? fs::path(o.input + ".cszi") : fs::path(o.output);
    write_file(out, res.bytes);

    const double cr = cszi::compression_ratio(grid.size() * 4, res.bytes.size());
    const double zero_frac = grid.size() ? 1.0 - double(res.nonzero_codes) / double(grid.size()) : 1.0;
    const auto &h = res.header;
    std::printf("%s: %zu -> %zu bytes, CR %.4g, bit rate %.4g, eb_abs %.6g, alpha %.4g", out.c_str(), grid.size() * 4,
                res.bytes.size(), cr, cszi::bit_rate(cr), h.eb_abs, h.alpha);
    if (h.predictor == cszi::PredictorKind::Interp)
        std::printf(", variants %s, dim order %s", join_variants(h).c_str(), join_order(h).c_str());
    std::printf(", zero codes %.2f%%, outliers %zu\n", 100.0 * zero_frac, res.outlier_count);
    return kOk;
}

int cmd_decompress(const Options &o) {
    const auto bytes = read_file(o.input);
    const cszi::Grid grid = cszi::decompress(bytes);
    fs::path out = o.output;
    if (out.empty()) {
        out = o.input;
        out = out.extension() == ".cszi" ? out.replace_extension(".out") : fs::path(o.input + ".out");
    }
    cszi::store_raw(grid, out);
    std::printf("%s: %zu values\n", out.c_str(), grid.size());
    return kOk;
}

int cmd_verify(const Options &o) {
    const cszi::Dims dims(o.dims);
    const auto a = cszi::load_raw(o.input, dims);
    const auto b = cszi::load_raw(o.second, dims);
    const double eb = bound(o, o.ebs.front()).resolve(cszi::value_range(a).range);
    const auto rep = cszi::verify_error_bound(a, b, eb);
    std::printf("max_abs_err %.6g, eb %.6g, psnr %s, violations %zu", rep.max_abs_err, eb,
                cszi::format_double(cszi::psnr(a, b)).c_str(), rep.violations);
    if (rep.first_violation) std::printf(", first at %zu", *rep.first_violation);
    std::printf("\n");
    return rep.ok() ? kOk : kVerify;
}

int cmd_sweep(const Options &o) {
    const cszi::Grid grid = cszi::load_raw(o.input, cszi::Dims(o.dims));
    std::vector<cszi::ErrorBound> ebs;
    for (double v : o.ebs) ebs.push_back(bound(o, v));
    std::vector<cszi::PredictorKind> preds;
    if (o.predictor != "lorenzo") preds.push_back(cszi::PredictorKind::Interp);
    if (o.predictor != "interp") preds.push_back(cszi::PredictorKind::Lorenzo);
    std::vector<bool> p2;
    if (o.pass2 != "on") p2.push_back(false);
    if (o.pass2 != "off") p2.push_back(true);

    const std::string name = fs::path(o.input).stem().string();
    std::vector<cszi::RateDistortionRecord> rows;
    for (auto p : preds)
        for (bool on : p2) {
            auto r = cszi::rd_sweep(grid, p, ebs, on, name);
            rows.insert(rows.end(), r.begin(), r.end());
        }
    cszi::sort_records(rows);

    std::ofstream file;
    if (!o.output.empty()) {
        file.open(o.output);
        if (!file) throw cszi::Error(cszi::ErrorCode::IoFailure, "cannot write " + o.output);
    }
    std::ostream &os = o.output.empty() ? std::cout : file;
    if (o.report == "jsonl")
        cszi::write_jsonl(os, rows);
    else
        cszi::write_csv(os, rows);
    return kOk;
}

int cmd_info(const Options &o) {
    const auto bytes = read_file(o.input);
    const auto a = cszi::parse_archive(bytes);
    const auto &h = a.header;
    std::printf("predictor   %s\n", std::string(cszi::to_string(h.predictor)).c_str());
    std::printf("dims       ");
    for (auto e : h.dims.extents()) std::printf(" %zu", e);
    std::printf("\neb          %s %s (abs %.6g)\n", std::string(cszi::to_string(h.eb.mode)).c_str(),
                cszi::format_double(h.eb.value).c_str(), h.eb_abs);
    if (h.predictor == cszi::PredictorKind::Interp) {
        std::printf("alpha       %.6g\n", h.alpha);
        std::printf("variants    %s\n", join_variants(h).c_str());
        std::printf("dim order   %s\n", join_order(h).c_str());
        std::printf("stride      %u, super chunk %u %u %u\n", h.anchor_stride, h.super_chunk[0], h.super_chunk[1],
                    h.super_chunk[2]);
    }
    std::printf("radius      %d\n", int(h.quant_radius));
    std::printf("pass-2      %s (codec %d)\n", h.pass2 ? "on" : "off", int(h.pass2_codec));
    std::printf("sections    anchors %zu, codebook %zu, codes %zu, outliers %zu\n", a.anchors.size(), a.codebook.size(),
                a.code_stream.size(), a.outliers.size());
    const double cr = cszi::compression_ratio(h.dims.size() * 4, bytes.size());
    std::printf("archive     %zu bytes, CR %.4g, bit rate %.4g\n", bytes.size(), cr, cszi::bit_rate(cr));
    return kOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Error-bounded lossy compressor for float32 grids"};
    app.require_subcommand(1);
    Options o;

    auto add_dims = [&](CLI::App *c, bool required) {
        auto *opt = c->add_option("-d,--dims", o.dims, "extents, slowest first (z y x)")->expected(1, 3);
        if (required) opt->required();
    };
    auto add_bound = [&](CLI::App *c, bool many) {
        auto *opt = c->add_option("--eb", o.ebs, "error bound")->required()->check(CLI::PositiveNumber);
        if (!many) opt->expected(1);
        c->add_option("--mode", o.mode, "bound mode")->check(CLI::IsMember({"abs", "rel"}))->capture_default_str();
    };

    auto *comp = app.add_subcommand("compress", "raw float32 -> archive");
    comp->add_option("input", o.input)->required();
    add_dims(comp, true);
    add_bound(comp, false);
    comp->add_option("--predictor", o.predictor)->check(CLI::IsMember({"interp", "lorenzo"}))->capture_default_str();
    comp->add_option("--pass2", o.pass2)->check(CLI::IsMember({"on", "off"}))->capture_default_str();
    comp->add_option("--pass2-codec", o.codec, "registered pass-2 codec id")->check(CLI::Range(0, 255));
    comp->add_option("--alpha", o.alpha, "pin the level bound ratio")->check(CLI::Range(1.0, 1e6));
    comp->add_option("--variants", o.variants, "cubic variant per dim (not-a-knot|natural)")
        ->check(CLI::IsMember({"not-a-knot", "notaknot", "natural"}));
    comp->add_option("--dim-order", o.dim_order, "interpolation order of dims");
    comp->add_option("-o,--output", o.output);

    auto *dec = app.add_subcommand("decompress", "archive -> raw float32");
    dec->add_option("input", o.input)->required();
    dec->add_option("-o,--output", o.output);

    auto *ver = app.add_subcommand("verify", "check a reconstruction against its original");
    ver->add_option("original", o.input)->required();
    ver->add_option("decompressed", o.second)->required();
    add_dims(ver, true);
    add_bound(ver, false);

    auto *swp = app.add_subcommand("sweep", "rate-distortion report over several bounds");
    swp->add_option("input", o.input)->required();
    add_dims(swp, true);
    add_bound(swp, true);
    swp->add_option("--predictor", o.predictor)->check(CLI::IsMember({"interp", "lorenzo", "both"}))->default_val("both");
    swp->add_option("--pass2", o.pass2)->check(CLI::IsMember({"on", "off", "both"}))->capture_default_str();
    swp->add_option("--report", o.report)->check(CLI::IsMember({"csv", "jsonl"}))->capture_default_str();
    swp->add_option("-o,--output", o.output);

    auto *inf = app.add_subcommand("info", "print an archive header");
    inf->add_option("input", o.input)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*comp) return cmd_compress(o);
        if (*dec) return cmd_decompress(o);
        if (*ver) return cmd_verify(o);
        if (*swp) return cmd_sweep(o);
        return cmd_info(o);
    } catch (const cszi::Error &e) {
        std::fprintf(stderr, "cszi: %s\n", e.what());
        return exit_for(e.code());
    } catch (const std::exception &e) {
        std::fprintf(stderr, "cszi: %s\n", e.what());
        return kOther;
    }
}
