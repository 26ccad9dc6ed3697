#include "cszi/outliers.hpp"

#include <string>

#include "cszi/detail/byte_io.hpp"
#include "cszi/error.hpp"

namespace cszi {

namespace {
constexpr std::size_t kEntryBytes = sizeof(std::uint64_t) + sizeof(float);
}

std::vector<std::uint8_t> compact_outliers(std::span<const IndexedValue> outliers) {
    std::vector<std::uint8_t> out;
    out.reserve(sizeof(std::uint64_t) + outliers.size() * kEntryBytes);
    detail::ByteWriter w(out);
    w.put<std::uint64_t>(outliers.size());
    for (std::size_t i = 0; i < outliers.size(); ++i) {
        if (i > 0 && outliers[i].index <= outliers[i - 1].index)
            throw Error(ErrorCode::MalformedSection, "outlier indices must be strictly increasing");
        w.put<std::uint64_t>(outliers[i].index);
        w.put<float>(outliers[i].value);
    }
    return out;
}

std::vector<IndexedValue> expand_outliers(std::span<const std::uint8_t> section) {
    detail::ByteReader r(section, ErrorCode::MalformedSection);
    const auto count = r.get<std::uint64_t>();
    if (count > r.remaining() / kEntryBytes || r.remaining() != count * kEntryBytes)
        throw Error(ErrorCode::MalformedSection,
                    "outlier section holds " + std::to_string(r.remaining()) + " bytes for " + std::to_string(count) + " entries");
    std::vector<IndexedValue> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        IndexedValue v;
        v.index = r.get<std::uint64_t>();
        v.value = r.get<float>();
        if (!out.empty() && v.index <= out.back().index)
            throw Error(ErrorCode::MalformedSection, "outlier indices must be strictly increasing");
        out.push_back(v);
    }
    return out;
}

}  // namespace cszi
