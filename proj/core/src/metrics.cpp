#include "cszi/metrics.hpp"

#include <cmath>
#include <limits>

#include "cszi/error.hpp"

namespace cszi {

namespace {

void require_same_dims(const Grid &a, const Grid &b) {
    if (!(a.dims == b.dims) || a.size() != b.size()) throw Error(ErrorCode::DimsMismatch, "grids differ in shape");
}

}  // namespace

double psnr(const Grid &original, const Grid &decompressed) {
    require_same_dims(original, decompressed);
    double sse = 0;
    for (std::size_t i = 0; i < original.size(); ++i) {
        const double d = static_cast<double>(original.values[i]) - static_cast<double>(decompressed.values[i]);
        sse += d * d;
    }
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (sse == 0) return inf;
    const double range = value_range(original).range;
    if (range == 0) return -inf;
    const double mse = sse / static_cast<double>(original.size());
    return 10.0 * std::log10(range * range / mse);
}

double compression_ratio(std::uint64_t original_bytes, std::uint64_t archive_bytes) {
    if (archive_bytes == 0) throw Error(ErrorCode::InvalidArgument, "archive size must be positive");
    return static_cast<double>(original_bytes) / static_cast<double>(archive_bytes);
}

BoundReport verify_error_bound(const Grid &original, const Grid &decompressed, double eb_abs) {
    require_same_dims(original, decompressed);
    BoundReport rep;
    for (std::size_t i = 0; i < original.size(); ++i) {
        const double err = std::abs(static_cast<double>(original.values[i]) - static_cast<double>(decompressed.values[i]));
        rep.max_abs_err = std::max(rep.max_abs_err, err);
        if (err > eb_abs) {
            if (!rep.first_violation) rep.first_violation = i;
            ++rep.violations;
        }
    }
    return rep;
}

double transfer_time(double original_bytes, double cr, double compress_bytes_per_sec, double decompress_bytes_per_sec,
                     double link_bytes_per_sec) {
    if (!(compress_bytes_per_sec > 0 && decompress_bytes_per_sec > 0 && link_bytes_per_sec > 0))
        throw Error(ErrorCode::InvalidArgument, "throughputs must be positive");
    if (!(cr >= 1)) throw Error(ErrorCode::InvalidArgument, "compression ratio must be >= 1");
    return original_bytes / compress_bytes_per_sec + (original_bytes / cr) / link_bytes_per_sec +
           original_bytes / decompress_bytes_per_sec;
}

}  // namespace cszi
