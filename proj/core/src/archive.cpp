#include "cszi/archive.hpp"

#include <algorithm>
#include <string>

#include "cszi/detail/byte_io.hpp"
#include "cszi/error.hpp"
#include "cszi/pass2.hpp"

namespace cszi {

std::string_view to_string(PredictorKind p) noexcept { return p == PredictorKind::Interp ? "interp" : "lorenzo"; }

namespace {

constexpr std::uint8_t kFlagPass2 = 0x01;

[[noreturn]] void malformed(const std::string &what) { throw Error(ErrorCode::MalformedSection, what); }

}  // namespace

std::vector<std::uint8_t> serialize_archive(const Archive &a) {
    const auto &h = a.header;
    std::vector<std::uint8_t> payload;
    payload.reserve(a.anchors.size() + a.codebook.size() + a.code_stream.size() + a.outliers.size());
    for (const auto *section : {&a.anchors, &a.codebook, &a.code_stream, &a.outliers})
        payload.insert(payload.end(), section->begin(), section->end());
    if (h.pass2) payload = find_pass2_codec(h.pass2_codec)->encode(payload);

    std::vector<std::uint8_t> out;
    out.reserve(kArchiveHeaderSize + payload.size());
    detail::ByteWriter w(out);
    for (char c : kArchiveMagic) w.put(static_cast<std::uint8_t>(c));
    w.put<std::uint16_t>(kArchiveVersion);
    w.put(static_cast<std::uint8_t>(h.predictor));
    w.put<std::uint8_t>(h.pass2 ? kFlagPass2 : 0);
    w.put(h.pass2_codec);
    w.put(static_cast<std::uint8_t>(h.dims.rank()));
    w.put(static_cast<std::uint8_t>(h.eb.mode));
    w.put<std::uint8_t>(0);
    for (std::size_t d = 0; d < kMaxRank; ++d)
        w.put<std::uint64_t>(d < h.dims.rank() ? h.dims.extent(d) : 0);
    w.put<double>(h.eb.value);
    w.put<double>(h.eb_abs);
    w.put<double>(h.alpha);
    for (auto v : h.cubic_variant) w.put(static_cast<std::uint8_t>(v));
    for (auto d : h.dim_order) w.put(d);
    w.put<std::uint16_t>(0);
    w.put<std::uint32_t>(h.anchor_stride);
    for (auto t : h.super_chunk) w.put<std::uint32_t>(t);
    w.put<std::uint32_t>(h.quant_radius);
    for (const auto *section : {&a.anchors, &a.codebook, &a.code_stream, &a.outliers})
        w.put<std::uint64_t>(section->size());
    w.put<std::uint64_t>(h.code_bit_count);
    w.put<std::uint64_t>(payload.size());
    w.put_bytes(payload);
    return out;
}

Archive parse_archive(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < kArchiveMagic.size() ||
        !std::equal(kArchiveMagic.begin(), kArchiveMagic.end(), bytes.begin(),
                    [](char m, std::uint8_t b) { return static_cast<std::uint8_t>(m) == b; }))
        throw Error(ErrorCode::BadMagic, "not a CSZI archive");
    if (bytes.size() < kArchiveHeaderSize)
        throw Error(ErrorCode::LengthMismatch, "archive shorter than its header");

    detail::ByteReader r(bytes.subspan(kArchiveMagic.size()), ErrorCode::LengthMismatch);
    const auto version = r.get<std::uint16_t>();
    if (version != kArchiveVersion) throw Error(ErrorCode::VersionUnsupported, "archive version " + std::to_string(version));

    Archive a;
    ArchiveHeader &h = a.header;
    const auto predictor = r.get<std::uint8_t>();
    if (predictor > static_cast<std::uint8_t>(PredictorKind::Lorenzo)) malformed("unknown predictor id");
    h.predictor = static_cast<PredictorKind>(predictor);
    const auto flags = r.get<std::uint8_t>();
    if (flags & ~kFlagPass2) malformed("unknown flag bits");
    h.pass2 = flags & kFlagPass2;
    h.pass2_codec = r.get<std::uint8_t>();
    const auto rank = r.get<std::uint8_t>();
    const auto mode = r.get<std::uint8_t>();
    if (mode > static_cast<std::uint8_t>(EbMode::Rel)) malformed("unknown eb mode");
    h.eb.mode = static_cast<EbMode>(mode);
    r.get<std::uint8_t>();
    std::array<std::size_t, kMaxRank> ext{};
    for (auto &e : ext) e = r.get<std::uint64_t>();
    if (rank < 1 || rank > kMaxRank) malformed("rank " + std::to_string(rank));
    try {
        h.dims = Dims(std::span<const std::size_t>(ext.data(), rank));
    } catch (const Error &e) {
        malformed(e.what());
    }
    h.eb.value = r.get<double>();
    h.eb_abs = r.get<double>();
    h.alpha = r.get<double>();
    for (auto &v : h.cubic_variant) {
        const auto raw = r.get<std::uint8_t>();
        if (raw > static_cast<std::uint8_t>(CubicVariant::Natural)) malformed("unknown cubic variant");
        v = static_cast<CubicVariant>(raw);
    }
    for (auto &d : h.dim_order) d = r.get<std::uint8_t>();
    r.get<std::uint16_t>();
    h.anchor_stride = r.get<std::uint32_t>();
    for (auto &t : h.super_chunk) t = r.get<std::uint32_t>();
    h.quant_radius = r.get<std::uint32_t>();
    std::array<std::uint64_t, 4> lengths{};
    for (auto &l : lengths) l = r.get<std::uint64_t>();
    h.code_bit_count = r.get<std::uint64_t>();
    const auto stored = r.get<std::uint64_t>();

    const auto body = bytes.subspan(kArchiveHeaderSize);
    if (stored != body.size())
        throw Error(ErrorCode::LengthMismatch,
                    "header declares " + std::to_string(stored) + " payload bytes, archive holds " + std::to_string(body.size()));

    std::vector<std::uint8_t> decoded;
    std::span<const std::uint8_t> payload = body;
    if (h.pass2) {
        decoded = find_pass2_codec(h.pass2_codec)->decode(body);
        payload = decoded;
    }
    std::uint64_t expected = 0;
    for (auto l : lengths) {
        if (l > payload.size()) throw Error(ErrorCode::LengthMismatch, "section longer than payload");
        expected += l;
    }
    if (expected != payload.size())
        throw Error(ErrorCode::LengthMismatch, "section lengths sum to " + std::to_string(expected) + ", payload has " +
                                                   std::to_string(payload.size()) + " bytes");
    if ((h.code_bit_count + 7) / 8 != lengths[2]) throw Error(ErrorCode::LengthMismatch, "code stream bit count");

    const std::array<std::vector<std::uint8_t> *, 4> sections{&a.anchors, &a.codebook, &a.code_stream, &a.outliers};
    auto it = payload.begin();
    for (std::size_t s = 0; s < sections.size(); ++s) {
        const auto len = static_cast<std::ptrdiff_t>(lengths[s]);
        sections[s]->assign(it, it + len);
        it += len;
    }
    return a;
}

}  // namespace cszi
