#ifndef CSZI_METRICS_HPP
#define CSZI_METRICS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>

#include "cszi/grid.hpp"

namespace cszi {

/// 10*log10(range(original)^2 / MSE). +inf when identical, -inf when the
/// original is constant but the pair differs.
double psnr(const Grid &original, const Grid &decompressed);

double compression_ratio(std::uint64_t original_bytes, std::uint64_t archive_bytes);

/// Bits per binary32 element.
inline double bit_rate(double cr) noexcept { return 32.0 / cr; }

struct BoundReport {
    double max_abs_err = 0;
    std::size_t violations = 0;
    std::optional<std::size_t> first_violation;

    bool ok() const noexcept { return violations == 0; }
};

BoundReport verify_error_bound(const Grid &original, const Grid &decompressed, double eb_abs);

/// Compress + ship compressed bytes + decompress, local I/O excluded.
double transfer_time(double original_bytes, double cr, double compress_bytes_per_sec,
                     double decompress_bytes_per_sec, double link_bytes_per_sec);

}  // namespace cszi

#endif
