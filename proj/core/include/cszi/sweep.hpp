#ifndef CSZI_SWEEP_HPP
#define CSZI_SWEEP_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cszi/archive.hpp"
#include "cszi/error_bound.hpp"
#include "cszi/grid.hpp"
#include "cszi/parallel.hpp"

namespace cszi {

struct RateDistortionRecord {
    std::string dataset;
    PredictorKind predictor = PredictorKind::Interp;
    ErrorBound eb;
    double cr = 0;
    double bit_rate = 0;
    double psnr = 0;
    double max_abs_err = 0;
    double compress_seconds = 0;
    double decompress_seconds = 0;
    bool pass2 = false;
};

/// Full pipeline round trip per bound. Records come back sorted by bit rate;
/// a bound violation throws Inconsistent.
std::vector<RateDistortionRecord> rd_sweep(const Grid &grid, PredictorKind predictor,
                                           std::span<const ErrorBound> ebs, bool pass2,
                                           const std::string &dataset = "", const Exec &exec = {});

/// Orders rows by (predictor, bit rate).
void sort_records(std::vector<RateDistortionRecord> &records);

void write_csv(std::ostream &os, std::span<const RateDistortionRecord> records);
void write_jsonl(std::ostream &os, std::span<const RateDistortionRecord> records);

/// "inf" / "-inf" sentinels, shortest round-trip text otherwise.
std::string format_double(double v);
double parse_double(const std::string &s);

}  // namespace cszi

#endif
