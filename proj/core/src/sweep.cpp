#include "cszi/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <limits>
#include <ostream>

#include <json.hpp>

#include "cszi/compressor.hpp"
#include "cszi/error.hpp"
#include "cszi/metrics.hpp"

namespace cszi {

std::vector<RateDistortionRecord> rd_sweep(const Grid &grid, PredictorKind predictor, std::span<const ErrorBound> ebs,
                                           bool pass2, const std::string &dataset, const Exec &exec) {
    using Clock = std::chrono::steady_clock;
    std::vector<RateDistortionRecord> out;
    const auto original_bytes = grid.size() * sizeof(float);
    for (const auto &eb : ebs) {
        CompressOptions opt;
        opt.eb = eb;
        opt.predictor = predictor;
        opt.pass2 = pass2;
        opt.exec = exec;
        const auto t0 = Clock::now();
        const CompressResult c = compress(grid, opt);
        const auto t1 = Clock::now();
        const Grid dec = decompress(c.bytes, exec);
        const auto t2 = Clock::now();

        const BoundReport rep = verify_error_bound(grid, dec, c.header.eb_abs);
        if (!rep.ok())
            throw Error(ErrorCode::Inconsistent, std::to_string(rep.violations) + " error-bound violations at eb " +
                                                     format_double(eb.value));
        RateDistortionRecord r;
        r.dataset = dataset;
        r.predictor = predictor;
        r.eb = eb;
        r.cr = compression_ratio(original_bytes, c.bytes.size());
        r.bit_rate = bit_rate(r.cr);
        r.psnr = psnr(grid, dec);
        r.max_abs_err = rep.max_abs_err;
        r.compress_seconds = std::chrono::duration<double>(t1 - t0).count();
        r.decompress_seconds = std::chrono::duration<double>(t2 - t1).count();
        r.pass2 = pass2;
        out.push_back(std::move(r));
    }
    std::stable_sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.bit_rate < b.bit_rate; });
    return out;
}

void sort_records(std::vector<RateDistortionRecord> &records) {
    std::stable_sort(records.begin(), records.end(), [](const auto &a, const auto &b) {
        if (a.predictor != b.predictor) return a.predictor < b.predictor;
        return a.bit_rate < b.bit_rate;
    });
}

std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string &s) {
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    double v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw Error(ErrorCode::InvalidArgument, "not a number: '" + s + "'");
    return v;
}

void write_csv(std::ostream &os, std::span<const RateDistortionRecord> records) {
    os << "dataset,predictor,eb_mode,eb,cr,bit_rate,psnr,max_abs_err,compress_seconds,decompress_seconds,pass2\n";
    for (const auto &r : records) {
        os << r.dataset << ',' << to_string(r.predictor) << ',' << to_string(r.eb.mode) << ',' << format_double(r.eb.value)
           << ',' << format_double(r.cr) << ',' << format_double(r.bit_rate) << ',' << format_double(r.psnr) << ','
           << format_double(r.max_abs_err) << ',' << format_double(r.compress_seconds) << ','
           << format_double(r.decompress_seconds) << ',' << (r.pass2 ? "on" : "off") << '\n';
    }
}

void write_jsonl(std::ostream &os, std::span<const RateDistortionRecord> records) {
    auto number = [](double v) -> nlohmann::ordered_json {
        if (std::isfinite(v)) return v;
        return format_double(v);
    };
    for (const auto &r : records) {
        nlohmann::ordered_json j;
        j["dataset"] = r.dataset;
        j["predictor"] = to_string(r.predictor);
        j["eb_mode"] = to_string(r.eb.mode);
        j["eb"] = r.eb.value;
        j["cr"] = number(r.cr);
        j["bit_rate"] = number(r.bit_rate);
        j["psnr"] = number(r.psnr);
        j["max_abs_err"] = number(r.max_abs_err);
        j["compress_seconds"] = r.compress_seconds;
        j["decompress_seconds"] = r.decompress_seconds;
        j["pass2"] = r.pass2;
        os << j.dump() << '\n';
    }
}

}  // namespace cszi
